// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "cbdcsim/http.hpp"

#include <sstream>

namespace cbdcsim
{

HttpResponse ok_json(Json body)
{
    return HttpResponse{200, std::move(body)};
}

int status_for_code(std::string const& code)
{
    if (code == errc::UnknownAccount || code == errc::UnknownBank ||
        code == errc::UnknownTransaction || code == errc::NotFound ||
        code == errc::UserNotOnboarded)
    {
        return 404;
    }
    if (code == errc::Unauthorized)
    {
        return 401;
    }
    if (code == errc::DuplicatePseudonym || code == errc::NonZeroBalance ||
        code == errc::WrongState || code == errc::DuplicateUser)
    {
        return 409;
    }
    if (code == errc::InsufficientFunds || code == errc::InsufficientReserves ||
        code == errc::NoViableRoute || code == errc::KycFailed)
    {
        return 422;
    }
    if (code == errc::StorageFailure || code == errc::StepUnrecoverable ||
        code == errc::ChainBroken)
    {
        return 500;
    }
    return 400;
}

HttpResponse error_response(Error const& err)
{
    return HttpResponse{status_for_code(err.code), Json{{"code", err.code}, {"message", err.message}}};
}

HttpRequest make_request(std::string const& method, std::string const& target, std::string body,
                         std::string const& api_key)
{
    HttpRequest req;
    req.method = method;
    auto qpos = target.find('?');
    req.path = target.substr(0, qpos);
    if (qpos != std::string::npos)
    {
        std::istringstream qs(target.substr(qpos + 1));
        std::string pair;
        while (std::getline(qs, pair, '&'))
        {
            auto eq = pair.find('=');
            if (eq != std::string::npos)
            {
                req.query[pair.substr(0, eq)] = pair.substr(eq + 1);
            }
        }
    }
    req.body = std::move(body);
    if (!api_key.empty())
    {
        req.headers["x-api-key"] = api_key;
    }
    return req;
}

namespace
{
std::vector<std::string> split_path(std::string const& path)
{
    std::vector<std::string> out;
    std::istringstream ss(path);
    std::string seg;
    while (std::getline(ss, seg, '/'))
    {
        if (!seg.empty())
        {
            out.push_back(seg);
        }
    }
    return out;
}
} // namespace

void ApiRouter::route(std::string const& method, std::string const& pattern, Handler handler)
{
    routes_.push_back(Route{method, split_path(pattern), std::move(handler)});
}

HttpResponse ApiRouter::handle(HttpRequest const& req)
{
    auto segs = split_path(req.path);
    for (auto const& r : routes_)
    {
        if (r.method != req.method || r.segments.size() != segs.size())
        {
            continue;
        }
        Params params;
        bool match = true;
        for (std::size_t i = 0; i < segs.size(); ++i)
        {
            auto const& pat = r.segments[i];
            if (pat.size() >= 2 && pat.front() == '{' && pat.back() == '}')
            {
                params[pat.substr(1, pat.size() - 2)] = segs[i];
            }
            else if (pat != segs[i])
            {
                match = false;
                break;
            }
        }
        if (match)
        {
            return r.handler(req, params);
        }
    }
    return error_response(Error{errc::NotFound, "no route for " + req.method + " " + req.path});
}

HttpResponse Transport::post(std::string const& service, std::string const& target,
                             Json const& body, std::string const& api_key)
{
    return send(service, make_request("POST", target, canonical(body), api_key));
}

HttpResponse Transport::get(std::string const& service, std::string const& target,
                            std::string const& api_key)
{
    return send(service, make_request("GET", target, {}, api_key));
}

HttpResponse Transport::del(std::string const& service, std::string const& target,
                            std::string const& api_key)
{
    return send(service, make_request("DELETE", target, {}, api_key));
}

HttpResponse LoopbackHub::send(std::string const& service, HttpRequest const& req)
{
    auto it = endpoints_.find(service);
    if (it == endpoints_.end() || it->second == nullptr)
    {
        return error_response(Error{errc::NotFound, "unknown service: " + service});
    }
    return it->second->handle(req);
}

} // namespace cbdcsim
