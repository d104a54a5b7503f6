// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "cbdcsim/json_util.hpp"
#include "cbdcsim/result.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cbdcsim
{

struct HttpRequest
{
    std::string method; // GET / POST / DELETE
    std::string path;   // no query string
    std::map<std::string, std::string> query;
    std::map<std::string, std::string> headers; // lowercase keys
    std::string body;

    Json json() const
    {
        if (body.empty())
        {
            return Json::object();
        }
        Json j = Json::parse(body, nullptr, false);
        return j.is_discarded() ? Json::object() : j;
    }
    std::string header(std::string const& k) const
    {
        auto it = headers.find(k);
        return it == headers.end() ? std::string{} : it->second;
    }
};

struct HttpResponse
{
    int status = 200;
    Json body = Json::object();

    bool ok() const
    {
        return status >= 200 && status < 300;
    }
    std::string error_code() const
    {
        return ok() ? std::string{} : get_str(body, "code");
    }
};

HttpResponse ok_json(Json body);
HttpResponse error_response(Error const& err);
int status_for_code(std::string const& code);

// Splits "/a/b?x=1" into path + query map.
HttpRequest make_request(std::string const& method, std::string const& target,
                         std::string body = {}, std::string const& api_key = {});

class HttpEndpoint
{
  public:
    virtual ~HttpEndpoint() = default;
    virtual HttpResponse handle(HttpRequest const& req) = 0;
};

// Minimal pattern router: literal segments or {captures}.
class ApiRouter : public HttpEndpoint
{
  public:
    using Params = std::map<std::string, std::string>;
    using Handler = std::function<HttpResponse(HttpRequest const&, Params const&)>;

    void route(std::string const& method, std::string const& pattern, Handler handler);
    HttpResponse handle(HttpRequest const& req) override;

  private:
    struct Route
    {
        std::string method;
        std::vector<std::string> segments;
        Handler handler;
    };
    std::vector<Route> routes_;
};

// How a service reaches its peers. Deterministic mode dispatches straight to
// the peer's handler; smoke mode goes over loopback TCP.
class Transport
{
  public:
    virtual ~Transport() = default;
    virtual HttpResponse send(std::string const& service, HttpRequest const& req) = 0;

    HttpResponse post(std::string const& service, std::string const& target, Json const& body,
                      std::string const& api_key);
    HttpResponse get(std::string const& service, std::string const& target,
                     std::string const& api_key);
    HttpResponse del(std::string const& service, std::string const& target,
                     std::string const& api_key);
};

class LoopbackHub : public Transport
{
  public:
    void bind(std::string const& service, HttpEndpoint* endpoint)
    {
        endpoints_[service] = endpoint;
    }
    HttpResponse send(std::string const& service, HttpRequest const& req) override;

  private:
    std::map<std::string, HttpEndpoint*> endpoints_;
};

} // namespace cbdcsim
