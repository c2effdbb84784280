#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "colax/base/base.hpp"
#include "colax/diagram/colax_diagram.hpp"
#include "colax/reedy2/fincat.hpp"
#include "colax/reedy2/groupement.hpp"
#include "colax/segal/segal.hpp"

namespace colax::cli {

struct BaseDecl {
  std::string name;
  std::string kind;  // finset | finvect
  int p = 2;
  std::map<std::string, std::string> overrides;  // we/cof/fib -> all | none | iso | mono | epi
  friend bool operator==(const BaseDecl&, const BaseDecl&) = default;
};

struct ReedyDecl {
  struct Obj {
    std::string name;
    int degree = 0;
    friend bool operator==(const Obj&, const Obj&) = default;
  };
  struct Arr {
    std::string name, src, dst, cls;
    friend bool operator==(const Arr&, const Arr&) = default;
  };
  struct Comp {
    std::string f, g, h;  // g ∘ f = h
    friend bool operator==(const Comp&, const Comp&) = default;
  };
  std::vector<Obj> objects;
  std::vector<Arr> arrows;
  std::vector<Comp> compose;
  friend bool operator==(const ReedyDecl&, const ReedyDecl&) = default;
};

struct GroupementDecl {
  std::string name;
  std::string builder;              // delta_plus | px | reedy1
  int bound = 0;                    // delta_plus, px
  std::vector<std::string> labels;  // px
  ReedyDecl reedy;                  // reedy1
  friend bool operator==(const GroupementDecl&, const GroupementDecl&) = default;
};

struct DiagramDecl {
  std::string name, groupement, base;
  int level = 0;
  std::map<std::string, int> values;                   // 1-cell name -> size/dimension
  std::map<std::string, std::vector<int>> actions;     // 2-cell name -> table
  std::map<std::pair<std::string, std::string>, std::vector<int>> colax;
  friend bool operator==(const DiagramDecl&, const DiagramDecl&) = default;
};

/// A unital presheaf on Δ_X, turned into a diagram on a chain groupement.
struct PresheafDecl {
  std::string name, groupement, base;
  int level = 0;
  std::map<std::string, int> values;                // sequence name -> size
  std::map<std::string, std::vector<int>> actions;  // Δ_X morphism name -> table, contravariant
  friend bool operator==(const PresheafDecl&, const PresheafDecl&) = default;
};

struct IconDecl {
  std::string name, src, dst;
  std::map<std::string, std::vector<int>> components;
  friend bool operator==(const IconDecl&, const IconDecl&) = default;
};

struct TaskDecl {
  std::string id, kind;
  std::map<std::string, std::string> params;
  int line = 0;
  friend bool operator==(const TaskDecl& a, const TaskDecl& b) {
    return a.id == b.id && a.kind == b.kind && a.params == b.params;
  }
};

struct Project {
  std::vector<BaseDecl> bases;
  std::vector<GroupementDecl> groupements;
  std::vector<DiagramDecl> diagrams;
  std::vector<PresheafDecl> presheaves;
  std::vector<IconDecl> icons;
  std::vector<TaskDecl> tasks;
  friend bool operator==(const Project&, const Project&) = default;
};

struct ParseError {
  int line = 0;
  int column = 0;
  std::string message;
};

struct ParseResult {
  std::optional<Project> project;
  std::vector<ParseError> errors;
};

const std::vector<std::string>& task_kinds();

/// Syntax first, then resolution of every name; errors carry line and column.
ParseResult parse_project(const std::string& text);
std::string serialize(const Project& p);

/// Built objects for a resolved project.
struct Resolved {
  std::map<std::string, base::Base> bases;
  std::map<std::string, std::shared_ptr<const reedy2::Groupement>> groupements;
  std::map<std::string, std::shared_ptr<const reedy2::ReedyCat>> reedy1;
  std::map<std::string, diagram::ColaxDiagram> diagrams;
  std::map<std::string, diagram::Icon> icons;
};

/// Throws DomainError naming the declaration that fails to build.
Resolved build(const Project& p);

}  // namespace colax::cli
