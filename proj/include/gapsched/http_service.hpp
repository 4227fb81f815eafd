// Copyright 2026 The gapsched Authors
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

// JSON-over-HTTP front end for SessionStore.
//
//   POST /sessions                          scenario, {"scenario": ...} or {"fixture": name}
//   GET  /sessions                          session ids
//   GET  /sessions/{id}                     summary
//   GET  /sessions/{id}/schedule
//   GET  /sessions/{id}/costs
//   GET  /sessions/{id}/windows[?duration_minutes=N]
//   GET  /sessions/{id}/history
//   POST /sessions/{id}/tasks?mode=preview|commit   {"task": ..., "expected_revision": n}
//   POST /sessions/{id}/undo                {"expected_revision": n}
//
// The revision precondition may also be sent as an If-Match header. Errors
// come back as {"error": {"code", "message", "field"}} with 400 (parse),
// 404, 409 (stale revision, nothing to undo) or 422 (validation).

#ifndef GAPSCHED_HTTP_SERVICE_HPP_
#define GAPSCHED_HTTP_SERVICE_HPP_

#include <functional>
#include <optional>
#include <string>

#include <httplib.h>
#include <json.hpp>

#include "gapsched/fixtures.hpp"
#include "gapsched/service.hpp"

namespace gapsched {

inline int http_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return 400;
    case ErrorCode::Validation: return 422;
    case ErrorCode::Domain: return 422;
    case ErrorCode::NotFound: return 404;
    case ErrorCode::Conflict: return 409;
    case ErrorCode::Io: return 500;
  }
  return 500;
}

class HttpService {
 public:
  /// `default_policy` applies to created sessions whose scenario does not
  /// name a policy.
  explicit HttpService(SessionStore& store, std::optional<InsertionPolicy> default_policy = std::nullopt)
      : store_(store), default_policy_(default_policy) {
    routes();
  }

  /// Binds and returns the port (an ephemeral one when `port` is 0).
  int bind(const std::string& host, int port) {
    if (port == 0) {
      const int p = server_.bind_to_any_port(host);
      if (p < 0) throw Error(ErrorCode::Io, "cannot bind " + host);
      return p;
    }
    if (!server_.bind_to_port(host, port)) throw Error(ErrorCode::Io, "cannot bind " + host + ":" + std::to_string(port));
    return port;
  }

  /// Blocks until stop().
  void serve() { server_.listen_after_bind(); }
  void stop() { server_.stop(); }
  void wait_until_ready() { server_.wait_until_ready(); }

 private:
  using json = nlohmann::json;
  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  static void reply(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  // Wraps a handler so that library errors map onto HTTP statuses.
  static Handler guarded(Handler h) {
    return [h = std::move(h)](const httplib::Request& req, httplib::Response& res) {
      try {
        h(req, res);
      } catch (const Error& e) {
        reply(res, http_status(e.code()), error_json(e));
      } catch (const json::exception& e) {
        reply(res, 400, error_json(Error(ErrorCode::Parse, e.what())));
      } catch (const std::exception& e) {
        reply(res, 500, error_json(Error(ErrorCode::Io, e.what())));
      }
    };
  }

  static json body_json(const httplib::Request& req, bool allow_empty) {
    if (req.body.empty()) {
      if (allow_empty) return json::object();
      throw Error(ErrorCode::Parse, "request body is empty");
    }
    auto j = detail::parse_json_text(req.body);
    if (!j.is_object()) throw Error(ErrorCode::Parse, "request body must be a JSON object");
    return j;
  }

  static std::optional<std::uint64_t> revision_of(const httplib::Request& req, const json& body) {
    if (body.contains("expected_revision") && !body["expected_revision"].is_null()) {
      const auto v = detail::get_int(body["expected_revision"], "expected_revision");
      if (v < 0) throw Error(ErrorCode::Validation, "must be non-negative", "expected_revision");
      return static_cast<std::uint64_t>(v);
    }
    if (req.has_header("If-Match")) {
      std::string tag = req.get_header_value("If-Match");
      std::erase(tag, '"');
      try {
        std::size_t used = 0;
        const auto v = std::stoull(tag, &used);
        if (used == tag.size()) return v;
      } catch (const std::exception&) {
      }
      throw Error(ErrorCode::Parse, "If-Match must carry a revision number", "If-Match");
    }
    return std::nullopt;
  }

  SessionSnapshot create_from(const json& body) {
    // An explicit "policy" beside "fixture"/"scenario" wins, then the policy
    // named inside a posted scenario, then the server default.
    const bool wrapped = body.contains("fixture") || body.contains("scenario");
    const bool explicit_policy = wrapped && body.contains("policy");
    Scenario scenario;
    bool named = false;
    if (body.contains("fixture")) {
      scenario = load_fixture(detail::get_string(body["fixture"], "fixture")).scenario;
    } else {
      const json& sc = body.contains("scenario") ? body["scenario"] : body;
      scenario = scenario_from_json(sc);
      named = sc.contains("policy");
    }
    InsertionPolicy policy = scenario.policy;
    if (explicit_policy) {
      policy = parse_policy(detail::get_string(body["policy"], "policy"));
    } else if (!named && default_policy_) {
      policy = *default_policy_;
    }
    return store_.create(scenario, policy);
  }

  void routes() {
    server_.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                 {"Access-Control-Allow-Headers", "Content-Type, If-Match"},
                                 {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    server_.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    server_.Get("/health", [](const httplib::Request&, httplib::Response& res) { reply(res, 200, {{"status", "ok"}}); });

    server_.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
                   reply(res, 201, summary_json(create_from(body_json(req, false))));
                 }));
    server_.Get("/sessions", guarded([this](const httplib::Request&, httplib::Response& res) {
                  reply(res, 200, {{"sessions", store_.ids()}});
                }));
    server_.Get(R"(/sessions/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
                  reply(res, 200, summary_json(store_.get(req.matches[1])));
                }));
    server_.Get(R"(/sessions/([^/]+)/schedule)", guarded([this](const httplib::Request& req, httplib::Response& res) {
                  reply(res, 200, schedule_json(store_.get(req.matches[1])));
                }));
    server_.Get(R"(/sessions/([^/]+)/costs)", guarded([this](const httplib::Request& req, httplib::Response& res) {
                  reply(res, 200, costs_json(store_.get(req.matches[1])));
                }));
    server_.Get(R"(/sessions/([^/]+)/history)", guarded([this](const httplib::Request& req, httplib::Response& res) {
                  reply(res, 200, history_json(store_.get(req.matches[1])));
                }));
    server_.Get(R"(/sessions/([^/]+)/windows)", guarded([this](const httplib::Request& req, httplib::Response& res) {
                  std::optional<Duration> probe;
                  if (req.has_param("duration_minutes")) {
                    const auto text = req.get_param_value("duration_minutes");
                    try {
                      probe = Duration(std::stoll(text));
                    } catch (const std::exception&) {
                      throw Error(ErrorCode::Parse, "expected an integer", "duration_minutes");
                    }
                  }
                  reply(res, 200, windows_json(store_.get(req.matches[1]), probe));
                }));
    server_.Post(R"(/sessions/([^/]+)/tasks)", guarded([this](const httplib::Request& req, httplib::Response& res) {
                   const std::string id = req.matches[1];
                   const std::string mode = req.has_param("mode") ? req.get_param_value("mode") : "preview";
                   if (mode != "preview" && mode != "commit") {
                     throw Error(ErrorCode::Parse, "mode must be preview or commit", "mode");
                   }
                   const json body = body_json(req, false);
                   const json& tj = body.contains("task") ? body["task"] : body;
                   const auto snap = store_.get(id);
                   const auto& sc = *snap.scenario;
                   const Task task =
                       detail::task_from_json(tj, TaskKind::Dynamic, sc.horizon ? sc.horizon->start : sc.epoch, "task");
                   std::optional<InsertionPolicy> policy;
                   if (body.contains("policy")) policy = parse_policy(detail::get_string(body["policy"], "policy"));
                   const auto out = store_.post_task(id, task, mode == "commit", revision_of(req, body), policy);
                   reply(res, 200, outcome_json(id, out));
                 }));
    server_.Post(R"(/sessions/([^/]+)/undo)", guarded([this](const httplib::Request& req, httplib::Response& res) {
                   const json body = body_json(req, true);
                   reply(res, 200, summary_json(store_.undo(req.matches[1], revision_of(req, body))));
                 }));
  }

  SessionStore& store_;
  std::optional<InsertionPolicy> default_policy_;
  httplib::Server server_;
};

}  // namespace gapsched

#endif  // GAPSCHED_HTTP_SERVICE_HPP_
