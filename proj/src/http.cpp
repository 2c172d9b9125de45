// Eigen before httplib: <resolv.h> defines a _res macro that breaks Eigen.
#include "quiverlab/service.hpp"

#include <thread>

#include "httplib.h"

namespace quiverlab {

struct HttpServer::Impl {
  ExplorerService& service;
  ServeOptions options;
  httplib::Server server;
  std::thread thread;

  Impl(ExplorerService& s, ServeOptions o) : service(s), options(std::move(o)) {}
};

HttpServer::HttpServer(ExplorerService& service, ServeOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {
  auto& server = impl_->server;
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    const auto r = impl_->service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get(R"(/session(/.*)?)", forward);
  server.Post(R"(/session(/.*)?)", forward);
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Options(R"(/session(/.*)?)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  if (!impl_->options.static_dir.empty() && !server.set_mount_point("/", impl_->options.static_dir))
    throw Error(ErrorKind::InvalidArgument, "static directory " + impl_->options.static_dir + " not found");
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start() {
  auto& o = impl_->options;
  int port = o.port;
  if (port == 0) {
    port = impl_->server.bind_to_any_port(o.host);
  } else if (!impl_->server.bind_to_port(o.host, port)) {
    port = -1;
  }
  if (port < 0) throw Error(ErrorKind::InvalidArgument, "cannot bind " + o.host + ":" + std::to_string(o.port));
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return port;
}

void HttpServer::run() {
  if (impl_->thread.joinable()) impl_->thread.join();
}

void HttpServer::stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace quiverlab
