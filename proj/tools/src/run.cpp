#include "colax/cli/run.hpp"

#include <functional>
#include <sstream>

#include "colax/diagram/latching.hpp"
#include "colax/error.hpp"
#include "colax/homotopy/homotopy.hpp"
#include "colax/homotopy/model.hpp"
#include "colax/segal/segal.hpp"
#include "json.hpp"

namespace colax::cli {

namespace {

using json = nlohmann::json;
using base::Arrow;
using diagram::ColaxDiagram;
using diagram::Icon;

struct Context {
  const Project& project;
  const Resolved& r;
  const RunOptions& opt;
  homotopy::Options hopt;
};

struct Outcome {
  Report report;
  json data = json::object();
};

json arrow_json(const Arrow& f) { return json{{"src", f.src.n}, {"dst", f.dst.n}, {"table", f.data}}; }

json values_json(const ColaxDiagram& f) {
  json v = json::object();
  const auto& g = f.groupement();
  for (int c = 0; c < g.one_cell_count(); ++c) {
    if (f.in_scope(c) && !g.is_unit(c)) v[g.one_cell(c).name] = f.value(c).n;
  }
  return v;
}

json flags_json(const homotopy::Classification& c) {
  auto flag = [](const homotopy::Flag& f) { return json{{"value", f.value}, {"witness", f.witness}}; };
  return json{{"we", flag(c.we)},
              {"cof", flag(c.cof)},
              {"fib", flag(c.fib)},
              {"trivcof-fib", json{{"left", flag(c.left_trivcof_fib)}, {"right", flag(c.right_trivcof_fib)}}},
              {"cof-trivfib", json{{"left", flag(c.left_cof_trivfib)}, {"right", flag(c.right_cof_trivfib)}}},
              {"ofs", json{{"left", flag(c.left_ofs)}, {"right", flag(c.right_ofs)}}}};
}

const std::string& param(const TaskDecl& t, const std::string& k) { return t.params.at(k); }

std::string param_or(const TaskDecl& t, const std::string& k, const std::string& d) {
  auto it = t.params.find(k);
  return it == t.params.end() ? d : it->second;
}

int int_param(const TaskDecl& t, const std::string& k, int d) {
  auto it = t.params.find(k);
  if (it == t.params.end()) return d;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw DomainError("parameter " + k + " is not an integer");
  }
}

std::vector<std::string> list_param(const TaskDecl& t, const std::string& k) {
  std::vector<std::string> out;
  std::stringstream ss(param_or(t, k, ""));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cell_param(const ColaxDiagram& f, const TaskDecl& t) {
  auto c = f.groupement().find_one_cell(param(t, "cell"));
  if (!c) throw DomainError("no 1-cell '" + param(t, "cell") + "'");
  return *c;
}

Outcome do_validate(const Context& c, const TaskDecl& t) {
  Outcome o;
  if (t.params.count("diagram")) {
    o.report.merge(diagram::validate_colax(c.r.diagrams.at(param(t, "diagram"))));
    o.report.record("diagram", param(t, "diagram"), true);
  }
  if (t.params.count("icon")) {
    o.report.merge(diagram::validate_icon(c.r.icons.at(param(t, "icon"))));
    o.report.record("icon", param(t, "icon"), true);
  }
  return o;
}

Outcome do_divisibility(const Context& c, const TaskDecl& t) {
  Outcome o;
  o.report.merge(reedy2::check_direct_divisibility(*c.r.groupements.at(param(t, "groupement"))));
  o.report.record("direct-divisibility", param(t, "groupement"), true);
  return o;
}

Outcome do_latch(const Context& c, const TaskDecl& t) {
  Outcome o;
  const auto& f = c.r.diagrams.at(param(t, "diagram"));
  const auto l = diagram::colax_latching_object(f, cell_param(f, t));
  o.data["apex"] = l.cocone.apex.n;
  o.data["index_objects"] = l.index.objects.size();
  if (l.to_value) o.data["to_value"] = arrow_json(*l.to_value);
  o.report.pass("latching-object", param(t, "cell"));
  return o;
}

Outcome do_match(const Context& c, const TaskDecl& t) {
  Outcome o;
  const auto& f = c.r.diagrams.at(param(t, "diagram"));
  const auto m = diagram::colax_matching_object(f, cell_param(f, t));
  o.data["apex"] = m.cone.apex.n;
  o.data["index_objects"] = m.index.objects.size();
  if (m.from_value) o.data["from_value"] = arrow_json(*m.from_value);
  o.report.pass("matching-object", param(t, "cell"));
  return o;
}

Outcome do_imap(const Context& c, const TaskDecl& t) {
  Outcome o;
  const auto& f = c.r.diagrams.at(param(t, "diagram"));
  const auto& g = f.groupement();
  std::vector<int> zs;
  if (t.params.count("cell")) {
    zs.push_back(cell_param(f, t));
  } else {
    for (int z = 0; z < g.one_cell_count(); ++z) {
      if (f.in_scope(z) && !g.is_unit(z)) zs.push_back(z);
    }
  }
  for (int z : zs) {
    const std::string name = g.one_cell(z).name;
    try {
      const auto cm = diagram::canonical_map_iz(f, z);
      o.data[name] = arrow_json(cm.iz);
      if (cm.latching.to_value && cm.matching.from_value) {
        const bool ok = cm.iz == f.base().compose(*cm.latching.to_value, *cm.matching.from_value);
        o.report.record("iz-factors-through-value", name, ok, "i_z differs from (F z -> M)∘(L -> F z)");
      } else {
        o.report.pass("matching-cone", name);
      }
    } catch (const Error& e) {
      o.report.fail("matching-cone", e.what(), name);
    }
  }
  return o;
}

Outcome do_classify(const Context& c, const TaskDecl& t) {
  Outcome o;
  const auto cl = homotopy::classify(c.r.icons.at(param(t, "icon")), c.hopt);
  o.data = flags_json(cl);
  o.report.pass("classified", param(t, "icon"));
  return o;
}

Outcome do_factor(const Context& c, const TaskDecl& t) {
  Outcome o;
  const Icon& s = c.r.icons.at(param(t, "icon"));
  std::vector<base::System> systems;
  if (t.params.count("system")) {
    systems.push_back(base::parse_system(param(t, "system")));
  } else {
    systems = {base::System::TrivCofFib, base::System::CofTrivFib, base::System::Ofs};
  }
  for (auto sys : systems) {
    const std::string name(base::system_name(sys));
    const auto fz = homotopy::factor_icon(s, sys, c.hopt);
    o.data[name] = json{{"middle", values_json(fz.middle)}};
    o.report.record("composite", name, homotopy::same_icon(diagram::compose(fz.left, fz.right), s), "ρ∘λ ≠ σ");
    const auto l = homotopy::classify(fz.left, c.hopt);
    const auto r = homotopy::classify(fz.right, c.hopt);
    o.report.record("left-class", name, l.in_left(sys), "λ outside the left class");
    o.report.record("right-class", name, r.in_right(sys), "ρ outside the right class");
  }
  return o;
}

Outcome do_lift(const Context& c, const TaskDecl& t) {
  Outcome o;
  const auto res = homotopy::lift_icon(c.r.icons.at(param(t, "left")), c.r.icons.at(param(t, "right")),
                                       c.r.icons.at(param(t, "top")), c.r.icons.at(param(t, "bottom")));
  if (res.lift) {
    json comps = json::object();
    const auto& g = res.lift->src.groupement();
    for (int z = 0; z < g.one_cell_count(); ++z) {
      if (res.lift->src.in_scope(z) && res.lift->has(z) && !g.is_unit(z)) comps[g.one_cell(z).name] = arrow_json(res.lift->component(z));
    }
    o.data["lift"] = comps;
  }
  o.report.record("lift", t.id, res.lift.has_value(), res.obstruction);
  return o;
}

homotopy::DiagramFamily family(const Context& c, const TaskDecl& t, std::vector<std::string>& names) {
  homotopy::DiagramFamily d;
  names = list_param(t, "diagrams");
  for (const auto& n : names) d.nodes.push_back(c.r.diagrams.at(n));
  for (const auto& i : list_param(t, "icons")) {
    const IconDecl* decl = nullptr;
    for (const auto& s : c.project.icons) {
      if (s.name == i) decl = &s;
    }
    auto index = [&](const std::string& n) {
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (names[k] == n) return static_cast<int>(k);
      }
      throw DomainError("icon '" + i + "' has an endpoint outside the diagram list");
    };
    d.edges.push_back({index(decl->src), index(decl->dst), c.r.icons.at(i)});
  }
  return d;
}

struct Shape {
  std::shared_ptr<const reedy2::Groupement> g;
  base::Base b = base::Base::finset();
  int level = 0;
};

Shape shape_of(const Context& c, const TaskDecl& t, const homotopy::DiagramFamily& d) {
  Shape s;
  if (!d.nodes.empty()) {
    s.g = d.nodes.front().groupement_ptr();
    s.b = d.nodes.front().base();
    s.level = d.nodes.front().level();
  }
  if (t.params.count("groupement")) s.g = c.r.groupements.at(param(t, "groupement"));
  if (t.params.count("base")) s.b = c.r.bases.at(param(t, "base"));
  if (!s.g) throw DomainError("an empty family needs groupement= and base=");
  s.level = int_param(t, "level", d.nodes.empty() ? s.g->bound() : s.level);
  return s;
}

Outcome do_limit(const Context& c, const TaskDecl& t, bool colimit) {
  Outcome o;
  std::vector<std::string> names;
  const auto d = family(c, t, names);
  const Shape s = shape_of(c, t, d);
  const ColaxDiagram* apex = nullptr;
  const std::vector<Icon>* legs = nullptr;
  homotopy::ColimitResult cr{ColaxDiagram(s.g, s.b, s.level), {}};
  homotopy::LimitResult lr{ColaxDiagram(s.g, s.b, s.level), {}};
  if (colimit) {
    cr = homotopy::colimit_colax(s.g, s.b, s.level, d);
    apex = &cr.apex;
    legs = &cr.legs;
  } else {
    lr = homotopy::limit_colax(s.g, s.b, s.level, d, c.hopt);
    apex = &lr.apex;
    legs = &lr.legs;
  }
  o.data["apex"] = values_json(*apex);
  o.report.merge(diagram::validate_colax(*apex));
  for (std::size_t k = 0; k < legs->size(); ++k) o.report.merge(diagram::validate_icon((*legs)[k]));
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto& edge = d.edges[e];
    const Icon& from = (*legs)[static_cast<std::size_t>(edge.from)];
    const Icon& to = (*legs)[static_cast<std::size_t>(edge.to)];
    const bool ok = colimit ? homotopy::same_icon(diagram::compose(edge.icon, to), from)
                            : homotopy::same_icon(diagram::compose(from, edge.icon), to);
    o.report.record("legs-commute", "edge " + std::to_string(e), ok, "leg triangle fails");
  }
  o.report.pass(colimit ? "colimit" : "limit", std::to_string(d.nodes.size()) + " nodes");
  return o;
}

std::shared_ptr<const segal::DeltaX> delta_x(const ColaxDiagram& f) {
  const auto& g = f.groupement();
  std::vector<std::string> labels;
  for (int o = 0; o < g.object_count(); ++o) labels.push_back(g.object_name(o));
  return std::make_shared<const segal::DeltaX>(labels, f.level());
}

Outcome do_bridge(const Context& c, const TaskDecl& t) {
  Outcome o;
  const auto& f = c.r.diagrams.at(param(t, "diagram"));
  const auto d = delta_x(f);
  const auto p = segal::to_presheaf(f, d);
  o.report.merge(segal::check_presheaf(p));
  o.report.record("round-trip", param(t, "diagram"), segal::from_presheaf(p, f.groupement_ptr()) == f,
                  "from_presheaf ∘ to_presheaf differs from the diagram");
  json v = json::object();
  for (int k = 0; k < d->object_count(); ++k) v[d->name(k)] = p.values[static_cast<std::size_t>(k)].n;
  o.data["values"] = v;
  return o;
}

Outcome do_joyal(const Context&, const TaskDecl& t) {
  Outcome o;
  const int m = int_param(t, "m", 3);
  o.report.merge(segal::check_joyal(segal::joyal_T(m)));
  o.report.pass("joyal", "m=" + std::to_string(m));
  return o;
}

Outcome do_segal(const Context& c, const TaskDecl& t) {
  Outcome o;
  o.report.merge(segal::check_segal_conditions(c.r.diagrams.at(param(t, "diagram"))));
  o.report.pass("segal-conditions", param(t, "diagram"));
  return o;
}

Outcome do_model(const Context& c, const TaskDecl& t) {
  Outcome o;
  const auto& g = c.r.groupements.at(param(t, "groupement"));
  const auto& b = c.r.bases.at(param(t, "base"));
  auto s = homotopy::enumerated_sample(t.id, g, b, int_param(t, "level", g->bound()), int_param(t, "min", 0),
                                       int_param(t, "max", 1));
  if (c.r.reedy1.count(param(t, "groupement"))) s.reedy1 = c.r.reedy1.at(param(t, "groupement"));
  for (const auto& d : c.project.groupements) {
    if (d.name == param(t, "groupement") && d.builder == "px" && b.cartesian()) s.presheaves = true;
  }
  homotopy::ModelLimits lim;
  lim.seed = c.opt.seed;
  lim.opt = c.hopt;
  lim.squares = static_cast<std::size_t>(int_param(t, "squares", 400));
  o.data["diagrams"] = s.diagrams.size();
  o.data["icons"] = s.icons.size();
  o.report.merge(homotopy::verify_model_axioms(s, lim));
  return o;
}

Outcome dispatch(const Context& c, const TaskDecl& t) {
  const std::string& k = t.kind;
  if (k == "validate") return do_validate(c, t);
  if (k == "divisibility") return do_divisibility(c, t);
  if (k == "latch") return do_latch(c, t);
  if (k == "match") return do_match(c, t);
  if (k == "imap") return do_imap(c, t);
  if (k == "classify") return do_classify(c, t);
  if (k == "factor") return do_factor(c, t);
  if (k == "lift") return do_lift(c, t);
  if (k == "limit") return do_limit(c, t, false);
  if (k == "colimit") return do_limit(c, t, true);
  if (k == "bridge") return do_bridge(c, t);
  if (k == "joyal") return do_joyal(c, t);
  if (k == "segal-check") return do_segal(c, t);
  if (k == "model-verify") return do_model(c, t);
  throw DomainError("unknown task kind '" + k + "'");
}

}  // namespace

RunResult run(const Project& p, const RunOptions& opt) {
  RunResult out;
  json tasks = json::array();
  std::ostringstream text;
  bool all = true;
  std::optional<Resolved> r;
  try {
    r = build(p);
  } catch (const std::exception& e) {
    json j{{"id", "build"}, {"kind", "build"}, {"pass", false}, {"data", json::object()},
           {"verdicts", json::array({json{{"check", "build"}, {"instance", ""}, {"pass", false}, {"witness", e.what()}}})}};
    tasks.push_back(j);
    text << "build: FAIL\n  " << e.what() << '\n';
    all = false;
  }
  if (r) {
    homotopy::Options hopt;
    hopt.parallel = opt.parallel;
    const Context c{p, *r, opt, hopt};
    for (const auto& t : p.tasks) {
      Outcome o;
      try {
        o = dispatch(c, t);
      } catch (const std::exception& e) {
        o.report.fail("error", e.what(), t.id);
      }
      json verdicts = json::array();
      for (const auto& v : o.report.verdicts()) {
        verdicts.push_back(json{{"check", v.check}, {"instance", v.instance}, {"pass", v.pass}, {"witness", v.witness}});
      }
      const bool ok = o.report.ok();
      all = all && ok;
      tasks.push_back(json{{"id", t.id}, {"kind", t.kind}, {"pass", ok}, {"data", o.data}, {"verdicts", verdicts}});
      text << "task " << t.id << " (" << t.kind << "): " << (ok ? "PASS" : "FAIL") << '\n';
      for (const auto& v : o.report.failures()) {
        text << "  " << v.check << (v.instance.empty() ? "" : " [" + v.instance + "]") << ": " << v.witness << '\n';
      }
    }
  }
  const json report{{"pass", all}, {"seed", opt.seed}, {"tasks", tasks}};
  out.json = report.dump(2) + "\n";
  text << (all ? "all tasks passed" : "some tasks failed") << '\n';
  out.text = text.str();
  out.exit_code = all ? 0 : 1;
  return out;
}

std::optional<std::string> explain(const std::string& kind) {
  static const std::map<std::string, std::string> doc = {
      {"validate", "validate diagram=<D> | icon=<S>\n  Coherence of a colax diagram (actions, colaxity, normality) or naturality of an icon."},
      {"divisibility", "divisibility groupement=<G>\n  Unique direct lifts along every decomposition, and their functoriality."},
      {"latch", "latch diagram=<D> cell=<z>\n  Colax-latching object L(D,z) and the map L(D,z) -> D z."},
      {"match", "match diagram=<D> cell=<z>\n  Colax-matching object M(D,z) and the map D z -> M(D,z)."},
      {"imap", "imap diagram=<D> [cell=<z>]\n  Canonical map i_z: L -> M from values below z; checks it factors through D z."},
      {"classify", "classify icon=<S>\n  Weak equivalence, Reedy cofibration/fibration and class membership for every system."},
      {"factor", "factor icon=<S> [system=trivcof-fib|cof-trivfib|ofs]\n  Reedy factorization S = ρ∘λ, with λ and ρ re-classified."},
      {"lift", "lift left=<L> right=<R> top=<T> bottom=<B>\n  Diagonal filler for a commuting square of icons, or the obstructing 1-cell."},
      {"limit", "limit diagrams=<D,...> icons=<S,...> [groupement= base= level=]\n  Stage-wise limit of a family of diagrams; legs are checked."},
      {"colimit", "colimit diagrams=<D,...> icons=<S,...> [groupement= base= level=]\n  Level-wise colimit of a family of diagrams; legs are checked."},
      {"bridge", "bridge diagram=<D>\n  Unital Δ_X-presheaf of a chain diagram over FinSet, functoriality and round trip."},
      {"joyal", "joyal m=<m>\n  Joyal duality tables up to m: bijectivity, inverses, functoriality, closed formula."},
      {"segal-check", "segal-check diagram=<D>\n  Whether each total colaxity map onto the edges of a chain is a weak equivalence."},
      {"model-verify", "model-verify groupement=<G> base=<B> max=<n> [min=<n>] [level=<k>] [squares=<n>]\n  "
                       "Model axioms on every diagram with values in [min, max] and every icon between them."},
  };
  auto it = doc.find(kind);
  if (it == doc.end()) return std::nullopt;
  return it->second;
}

}  // namespace colax::cli
