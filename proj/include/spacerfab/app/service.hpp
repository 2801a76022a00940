#ifndef SPACERFAB_APP_SERVICE_HPP
#define SPACERFAB_APP_SERVICE_HPP

#include <map>
#include <memory>
#include <string>

#include "spacerfab/app/params.hpp"

namespace spacerfab::app {

struct HttpResult {
    int status = 200;
    std::string content_type = "text/plain";
    std::string body;
};

// Routes:
//   GET /health    200 "ok"
//   GET /defaults  200 defaults_json()
//   GET /scene     200 canonical scene JSON; 422 {"error": "<param>: <reason>"}
// Stateless: the response depends only on path and query.
HttpResult handle_get(const std::string& path, const std::multimap<std::string, std::string>& query);

// HTTP front end over handle_get.
class SceneService {
public:
    SceneService();
    ~SceneService();
    SceneService(const SceneService&) = delete;
    SceneService& operator=(const SceneService&) = delete;

    // Binds host:port; port 0 picks a free port. Returns the bound port or -1.
    int bind(const std::string& host, int port);
    // Serves until stop() is called. Requires a successful bind().
    bool listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace spacerfab::app

#endif  // SPACERFAB_APP_SERVICE_HPP
