#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cokasch/module.hpp"
#include "cokasch/ring.hpp"
#include "cokasch/zmodule.hpp"

namespace cokasch {

/// A parsed and fully validated batch file: every description passed its
/// validator and every task reference resolved before any task may run.
/// Entries are kept name-sorted, so equal files load to equal workspaces.
struct Workspace {
  struct Task {
    std::string command;
    std::string target;
  };

  std::vector<std::pair<std::string, RingPtr>> rings;
  std::vector<std::pair<std::string, ModulePtr>> modules;
  std::vector<std::pair<std::string, ZModuleExpr>> zmodules;
  std::vector<Task> tasks;

  // Lookups throw std::invalid_argument on unknown names.
  const RingPtr& ring(const std::string& name) const;
  const ModulePtr& module(const std::string& name) const;
  const ZModuleExpr& zmodule(const std::string& name) const;
};

// Throws std::invalid_argument (ValidationError for broken axioms) naming the
// first offending entry in load order: rings, modules, zmodules, tasks.
Workspace parse_workspace(const std::string& json_text);

// Task verbs accepted inside a workspace file.
std::vector<std::string> task_commands();

/// One executed task. json_object is the canonical machine-readable report,
/// an object with fields {task, target, verdict, witness?, data?, timings};
/// text renders the same content for terminals. harness_failure marks a
/// verify task that found a counterexample; a false mathematical verdict on
/// its own is a result, not a failure.
struct TaskOutcome {
  std::string command;
  std::string target;
  bool verdict = true;
  bool harness_failure = false;
  std::string json_object;
  std::string text;
};

TaskOutcome run_task(const Workspace& ws, const Workspace::Task& task, u64 seed);

// Runs ws.tasks in file order; outcome i belongs to task i.
std::vector<TaskOutcome> run_tasks(const Workspace& ws, u64 seed);

// A JSON array of the per-task objects / the concatenated text blocks.
// Byte-identical for equal workspaces and seeds.
std::string render_reports_json(const std::vector<TaskOutcome>& outcomes);
std::string render_reports_text(const std::vector<TaskOutcome>& outcomes);

}  // namespace cokasch
