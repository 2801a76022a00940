#include "spacerfab/app/service.hpp"

#include <httplib.h>
#include <json.hpp>

#include "spacerfab/app/commands.hpp"
#include "spacerfab/errors.hpp"

namespace spacerfab::app {

namespace {

HttpResult error_result(int status, const std::string& message) {
    return {status, "application/json", nlohmann::json{{"error", message}}.dump()};
}

}  // namespace

HttpResult handle_get(const std::string& path, const std::multimap<std::string, std::string>& query) {
    if (path == "/health") return {200, "text/plain", "ok"};
    if (path == "/defaults") return {200, "application/json", defaults_json()};
    if (path == "/scene") {
        try {
            const FabricSpec spec = to_fabric_spec(params_from_query(query));
            return {200, "application/json", scene_text(spec)};
        } catch (const ParameterError& e) {
            return error_result(422, e.what());
        }
    }
    return error_result(404, "no route for " + path);
}

struct SceneService::Impl {
    httplib::Server server;
};

SceneService::SceneService() : impl_(std::make_unique<Impl>()) {
    auto route = [](const httplib::Request& req, httplib::Response& res) {
        const HttpResult result = handle_get(req.path, req.params);
        res.status = result.status;
        res.set_content(result.body, result.content_type);
    };
    impl_->server.Get("/health", route);
    impl_->server.Get("/defaults", route);
    impl_->server.Get("/scene", route);
    impl_->server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
            if (ep) std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            message = e.what();
        }
        res.status = 500;
        res.set_content(nlohmann::json{{"error", message}}.dump(), "application/json");
    });
}

SceneService::~SceneService() { stop(); }

int SceneService::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool SceneService::listen() { return impl_->server.listen_after_bind(); }

void SceneService::stop() {
    if (impl_) impl_->server.stop();
}

}  // namespace spacerfab::app
