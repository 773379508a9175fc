// Copyright 2026 The lexharmony Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <map>
#include <string>

#include "httplib.h"
#include "lexharmony/review_api.hpp"

namespace lexharmony {

/// Routes the review API onto an httplib server. The caller binds and
/// listens (server.listen / bind_to_any_port + listen_after_bind).
inline void install_review_routes(httplib::Server& server, ReviewService& service) {
  auto reply = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json; charset=utf-8");
  };
  auto params = [](const httplib::Request& req) {
    std::map<std::string, std::string> q;
    for (const auto& [k, v] : req.params) q[k] = v;
    return q;
  };
  for (const char* path : {"/api/session", "/api/candidates", "/api/preview"}) {
    server.Get(path, [&service, reply, params, path](const httplib::Request& req, httplib::Response& res) {
      reply(res, service.handle("GET", path, params(req), req.body));
    });
  }
  for (const char* path : {"/api/decisions", "/api/iterate"}) {
    server.Post(path, [&service, reply, params, path](const httplib::Request& req, httplib::Response& res) {
      reply(res, service.handle("POST", path, params(req), req.body));
    });
  }
}

}  // namespace lexharmony
