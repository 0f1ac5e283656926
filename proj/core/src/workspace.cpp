#include "cokasch/workspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cokasch/oracle.hpp"
#include "cokasch/properties.hpp"
#include "cokasch/serialize.hpp"
#include "json.hpp"

namespace cokasch {

namespace {

using nlohmann::json;

constexpr i64 kVerifyBudget = 24;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(e.what());
  }
}

json rows_of(const IntMatrix& a) {
  json rows = json::array();
  for (int r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  return rows;
}

template <typename T>
const T& lookup(const std::vector<std::pair<std::string, T>>& entries, const std::string& name,
                const char* kind) {
  for (const auto& [key, value] : entries)
    if (key == name) return value;
  throw std::invalid_argument(std::string("unknown ") + kind + " '" + name + "'");
}

bool has_name(const std::vector<std::string>& names, const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

void check_task(const Workspace& ws, const Workspace::Task& task, const std::string& where) {
  if (!has_name(task_commands(), task.command))
    throw std::invalid_argument(where + ": unknown command '" + task.command + "'");
  auto known = [&](const auto& entries) {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const auto& e) { return e.first == task.target; });
  };
  const std::string& cmd = task.command;
  if (cmd == "simples" || cmd == "cartan" || cmd == "check-hring" || cmd == "witness-hring") {
    if (!known(ws.rings))
      throw std::invalid_argument(where + ": target names no ring '" + task.target + "'");
  } else if (cmd == "check-cokasch" || cmd == "check-kasch") {
    if (!known(ws.modules))
      throw std::invalid_argument(where + ": target names no module '" + task.target + "'");
  } else if (cmd == "check-z") {
    if (!known(ws.zmodules))
      throw std::invalid_argument(where + ": target names no zmodule '" + task.target + "'");
  } else if (cmd == "verify") {
    if (task.target != "all" && !has_name(harness_check_ids(), task.target))
      throw std::invalid_argument(where + ": unknown check id '" + task.target + "'");
    if (ws.rings.empty())
      throw std::invalid_argument(where + ": verify needs at least one ring in the workspace");
  } else if (cmd == "validate") {
    if (task.target != "all" && !known(ws.rings) && !known(ws.modules) && !known(ws.zmodules))
      throw std::invalid_argument(where + ": target names nothing in the workspace");
  }
}

json simple_payload(const std::vector<SimpleEntry>& catalog, i64 index) {
  const SimpleEntry& entry = catalog[static_cast<std::size_t>(index)];
  json payload;
  payload["simple"] = index;
  payload["orders"] = entry.module->gen_orders();
  json action = json::object();
  for (int k = 0; k < entry.module->ring()->rank(); ++k)
    action[std::to_string(k)] = rows_of(entry.module->action(k));
  payload["action"] = action;
  return payload;
}

struct TaskBody {
  bool verdict = true;
  bool harness_failure = false;
  i64 instances = 1;
  json witness;  // null when absent
  json data;     // null when absent
};

TaskBody run_validate(const Workspace& ws, const std::string& target) {
  TaskBody body;
  i64 checked = 0;
  for (const auto& [name, ring] : ws.rings)
    if (target == "all" || name == target) {
      validate_ring(ring->data());
      ++checked;
    }
  for (const auto& [name, m] : ws.modules)
    if (target == "all" || name == target) {
      validate_module(*m->ring(), m->data());
      ++checked;
    }
  for (const auto& [name, z] : ws.zmodules)
    if (target == "all" || name == target) {
      validate_zmodule(z);
      ++checked;
    }
  if (checked == 0) throw std::invalid_argument("validate target names nothing: '" + target + "'");
  body.instances = checked;
  return body;
}

TaskBody run_simples(const Workspace& ws, const std::string& target) {
  const RingPtr& ring = ws.ring(target);
  auto catalog = simple_catalog(ring);
  TaskBody body;
  json list = json::array();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    json entry = simple_payload(catalog, static_cast<i64>(i));
    entry["cover"] = catalog[i].cover_idempotent;
    entry["endo_size"] = catalog[i].endo_size;
    list.push_back(entry);
  }
  body.data = json{{"simples", list}};
  return body;
}

TaskBody run_cartan(const Workspace& ws, const std::string& target) {
  const RingPtr& ring = ws.ring(target);
  CartanMatrix cartan = cartan_matrix(ring, simple_catalog(ring));
  TaskBody body;
  body.data = json{{"matrix", rows_of(cartan.entries)}, {"diagonal", cartan.is_diagonal()}};
  return body;
}

TaskBody run_module_check(const Workspace& ws, const std::string& target, bool co_kasch) {
  const ModulePtr& m = ws.module(target);
  auto catalog = simple_catalog(m->ring());
  PropertyReport report = co_kasch ? is_co_kasch(m, catalog) : is_kasch(m, catalog);
  TaskBody body;
  body.verdict = report.verdict;
  if (report.witness_simple) body.witness = simple_payload(catalog, *report.witness_simple);
  return body;
}

TaskBody run_check_hring(const Workspace& ws, const std::string& target) {
  const RingPtr& ring = ws.ring(target);
  auto catalog = simple_catalog(ring);
  PropertyReport report = is_h_ring(ring, catalog);
  TaskBody body;
  body.verdict = report.verdict;
  if (!report.verdict) {
    body.witness = json{{"pair", {report.witness_pair->first, report.witness_pair->second}},
                        {"cocycle", rows_of(*report.witness_matrix)}};
  }
  return body;
}

TaskBody run_witness_hring(const Workspace& ws, const std::string& target) {
  const RingPtr& ring = ws.ring(target);
  auto catalog = simple_catalog(ring);
  PropertyReport report = is_h_ring(ring, catalog);
  TaskBody body;
  body.verdict = report.verdict;
  if (!report.verdict) {
    const auto [i, j] = *report.witness_pair;
    Ext1Result ext = ext1(ring, catalog, static_cast<int>(i), static_cast<int>(j));
    ModulePtr x = construct_extension(ext, *report.witness_matrix);
    PropertyReport x_co_kasch = is_co_kasch(x, catalog);
    body.witness = json{{"pair", {i, j}},
                        {"cocycle", rows_of(*report.witness_matrix)},
                        {"extension", json::parse(module_to_json(*x, target))}};
    if (x_co_kasch.witness_simple) body.witness["non_co_kasch_simple"] = *x_co_kasch.witness_simple;
  }
  return body;
}

TaskBody run_check_z(const Workspace& ws, const std::string& target) {
  PropertyReport report = is_co_kasch_z(ws.zmodule(target));
  TaskBody body;
  body.verdict = report.verdict;
  if (report.witness_prime) body.witness = json{{"prime", *report.witness_prime}};
  return body;
}

TaskBody run_verify(const Workspace& ws, const std::string& target, u64 seed) {
  std::vector<RingPtr> pool;
  for (const auto& [name, ring] : ws.rings) pool.push_back(ring);
  std::vector<std::string> ids =
      target == "all" ? harness_check_ids() : std::vector<std::string>{target};
  TaskBody body;
  body.instances = 0;
  json counts = json::object();
  json failures = json::object();
  for (const std::string& id : ids) {
    HarnessResult result = run_harness(id, pool, seed, kVerifyBudget);
    body.instances += result.instances;
    counts[id] = result.instances;
    if (!result.passed()) {
      body.harness_failure = true;
      body.verdict = false;
      failures[id] = result.failures;
    }
  }
  body.data = json{{"instances_by_check", counts}};
  if (body.harness_failure) body.witness = json{{"failures", failures}};
  return body;
}

TaskBody dispatch(const Workspace& ws, const Workspace::Task& task, u64 seed) {
  const std::string& cmd = task.command;
  if (cmd == "validate") return run_validate(ws, task.target);
  if (cmd == "simples") return run_simples(ws, task.target);
  if (cmd == "cartan") return run_cartan(ws, task.target);
  if (cmd == "check-cokasch") return run_module_check(ws, task.target, true);
  if (cmd == "check-kasch") return run_module_check(ws, task.target, false);
  if (cmd == "check-hring") return run_check_hring(ws, task.target);
  if (cmd == "witness-hring") return run_witness_hring(ws, task.target);
  if (cmd == "check-z") return run_check_z(ws, task.target);
  if (cmd == "verify") return run_verify(ws, task.target, seed);
  throw std::invalid_argument("unknown command '" + cmd + "'");
}

std::string render_text(const Workspace::Task& task, const TaskBody& body) {
  std::string text = task.command + " " + task.target + ": ";
  if (task.command == "verify")
    text += body.harness_failure ? "FAIL" : "pass";
  else
    text += body.verdict ? "verdict true" : "verdict false";
  if (!body.data.is_null())
    for (const auto& [key, value] : body.data.items()) text += "\n  " + key + ": " + value.dump();
  if (!body.witness.is_null()) text += "\n  witness: " + body.witness.dump();
  text += "\n  instances: " + std::to_string(body.instances);
  return text;
}

}  // namespace

const RingPtr& Workspace::ring(const std::string& name) const {
  return lookup(rings, name, "ring");
}

const ModulePtr& Workspace::module(const std::string& name) const {
  return lookup(modules, name, "module");
}

const ZModuleExpr& Workspace::zmodule(const std::string& name) const {
  return lookup(zmodules, name, "zmodule");
}

std::vector<std::string> task_commands() {
  return {"validate",    "simples",       "cartan",  "check-cokasch", "check-kasch",
          "check-hring", "witness-hring", "check-z", "verify"};
}

Workspace parse_workspace(const std::string& json_text) {
  json doc = parse_document(json_text);
  if (!doc.is_object()) throw std::invalid_argument("workspace must be a JSON object");
  Workspace ws;

  if (doc.contains("rings")) {
    const json& rings = doc.at("rings");
    if (!rings.is_object()) throw std::invalid_argument("workspace.rings must be an object");
    for (const auto& [name, value] : rings.items()) {
      try {
        ws.rings.emplace_back(name, FiniteRing::create(ring_from_json(value.dump())));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("ring '" + name + "': " + e.what());
      }
    }
  }

  if (doc.contains("modules")) {
    const json& modules = doc.at("modules");
    if (!modules.is_object()) throw std::invalid_argument("workspace.modules must be an object");
    for (const auto& [name, value] : modules.items()) {
      try {
        ModuleDescription desc = module_from_json(value.dump());
        ws.modules.emplace_back(name,
                                FiniteModule::create(ws.ring(desc.ring), std::move(desc.data)));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("module '" + name + "': " + e.what());
      }
    }
  }

  if (doc.contains("zmodules")) {
    const json& zmodules = doc.at("zmodules");
    if (!zmodules.is_object()) throw std::invalid_argument("workspace.zmodules must be an object");
    for (const auto& [name, value] : zmodules.items()) {
      if (!value.is_string())
        throw std::invalid_argument("zmodule '" + name + "' must be an expression string");
      try {
        ws.zmodules.emplace_back(name, parse_zmodule(value.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("zmodule '" + name + "': " + e.what());
      }
    }
  }

  if (doc.contains("tasks")) {
    const json& tasks = doc.at("tasks");
    if (!tasks.is_array()) throw std::invalid_argument("workspace.tasks must be an array");
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const json& entry = tasks[i];
      const std::string where = "tasks[" + std::to_string(i) + "]";
      if (!entry.is_object() || !entry.contains("command") || !entry.contains("target") ||
          !entry.at("command").is_string() || !entry.at("target").is_string())
        throw std::invalid_argument(where + " must be a {command, target} object");
      Workspace::Task task{entry.at("command").get<std::string>(),
                           entry.at("target").get<std::string>()};
      check_task(ws, task, where);
      ws.tasks.push_back(std::move(task));
    }
  }

  return ws;
}

TaskOutcome run_task(const Workspace& ws, const Workspace::Task& task, u64 seed) {
  TaskBody body = dispatch(ws, task, seed);
  json report;
  report["task"] = task.command;
  report["target"] = task.target;
  report["verdict"] = body.verdict;
  if (!body.witness.is_null()) report["witness"] = body.witness;
  if (!body.data.is_null()) report["data"] = body.data;
  report["timings"] = json{{"instances", body.instances}};

  TaskOutcome outcome;
  outcome.command = task.command;
  outcome.target = task.target;
  outcome.verdict = body.verdict;
  outcome.harness_failure = body.harness_failure;
  outcome.json_object = report.dump(2);
  outcome.text = render_text(task, body);
  return outcome;
}

std::vector<TaskOutcome> run_tasks(const Workspace& ws, u64 seed) {
  std::vector<TaskOutcome> outcomes;
  for (const Workspace::Task& task : ws.tasks) outcomes.push_back(run_task(ws, task, seed));
  return outcomes;
}

std::string render_reports_json(const std::vector<TaskOutcome>& outcomes) {
  json arr = json::array();
  for (const TaskOutcome& outcome : outcomes) arr.push_back(json::parse(outcome.json_object));
  return arr.dump(2) + "\n";
}

std::string render_reports_text(const std::vector<TaskOutcome>& outcomes) {
  std::string text;
  for (const TaskOutcome& outcome : outcomes) text += outcome.text + "\n";
  return text;
}

}  // namespace cokasch
