#include "colax/cli/project.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "colax/error.hpp"

namespace colax::cli {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
  std::optional<std::vector<int>> table;
  int table_column = 0;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int column, const std::string& msg) : std::runtime_error(msg), line(line), column(column) {}
  int line;
  int column;
};

std::vector<int> parse_table(const std::string& body, int line, int column) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t used = 0;
      const int v = std::stoi(cur, &used);
      if (used != cur.size()) throw std::invalid_argument(cur);
      out.push_back(v);
    } catch (const std::exception&) {
      throw SyntaxError(line, column, "bad table entry '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : body) {
    if (c == ' ' || c == '\t' || c == ',' || c == ';') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

Line tokenize(const std::string& raw, int number) {
  Line l;
  l.number = number;
  std::string s = raw;
  if (auto h = s.find('#'); h != std::string::npos) s = s.substr(0, h);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
      ++i;
      continue;
    }
    if (s[i] == '[') {
      const auto close = s.find(']', i);
      if (close == std::string::npos) throw SyntaxError(number, static_cast<int>(i) + 1, "unterminated table");
      l.table = parse_table(s.substr(i + 1, close - i - 1), number, static_cast<int>(i) + 1);
      l.table_column = static_cast<int>(i) + 1;
      for (std::size_t k = close + 1; k < s.size(); ++k) {
        if (s[k] != ' ' && s[k] != '\t' && s[k] != '\r') throw SyntaxError(number, static_cast<int>(k) + 1, "text after table");
      }
      break;
    }
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    l.tokens.push_back({s.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return l;
}

int to_int(const Token& t, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(t.text, &used);
    if (used == t.text.size()) return v;
  } catch (const std::exception&) {
  }
  throw SyntaxError(line, t.column, "expected an integer, got '" + t.text + "'");
}

void expect_count(const Line& l, std::size_t n, const std::string& form) {
  if (l.tokens.size() != n) {
    const int col = l.tokens.size() > n ? l.tokens[n].column : (l.tokens.empty() ? 1 : l.tokens.back().column);
    throw SyntaxError(l.number, col, "expected '" + form + "'");
  }
}

void expect_word(const Line& l, std::size_t i, const std::string& w, const std::string& form) {
  if (i >= l.tokens.size() || l.tokens[i].text != w) {
    throw SyntaxError(l.number, i < l.tokens.size() ? l.tokens[i].column : 1, "expected '" + form + "'");
  }
}

std::vector<int> need_table(const Line& l) {
  if (!l.table) throw SyntaxError(l.number, l.tokens.back().column, "missing [table]");
  return *l.table;
}

struct Where {
  int line = 0;
  int column = 0;
};

// Parameters of each task kind: name -> referenced namespace ("" for plain values).
struct ParamSpec {
  std::string name;
  std::string ref;  // base | groupement | diagram | icon | diagrams | icons | ""
  bool required = true;
};

const std::map<std::string, std::vector<ParamSpec>>& task_params() {
  static const std::map<std::string, std::vector<ParamSpec>> t = {
      {"validate", {{"diagram", "diagram", false}, {"icon", "icon", false}}},
      {"divisibility", {{"groupement", "groupement"}}},
      {"latch", {{"diagram", "diagram"}, {"cell", ""}}},
      {"match", {{"diagram", "diagram"}, {"cell", ""}}},
      {"imap", {{"diagram", "diagram"}, {"cell", "", false}}},
      {"classify", {{"icon", "icon"}}},
      {"factor", {{"icon", "icon"}, {"system", "", false}}},
      {"lift", {{"left", "icon"}, {"right", "icon"}, {"top", "icon"}, {"bottom", "icon"}}},
      {"limit",
       {{"diagrams", "diagrams", false}, {"icons", "icons", false}, {"groupement", "groupement", false},
        {"base", "base", false}, {"level", "", false}}},
      {"colimit",
       {{"diagrams", "diagrams", false}, {"icons", "icons", false}, {"groupement", "groupement", false},
        {"base", "base", false}, {"level", "", false}}},
      {"bridge", {{"diagram", "diagram"}}},
      {"joyal", {{"m", ""}}},
      {"segal-check", {{"diagram", "diagram"}}},
      {"model-verify",
       {{"groupement", "groupement"}, {"base", "base"}, {"level", "", false}, {"min", "", false}, {"max", ""},
        {"squares", "", false}}},
  };
  return t;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

const std::set<std::string> kPredicates = {"all", "none", "iso", "mono", "epi"};

class Parser {
 public:
  explicit Parser(const std::string& text) {
    std::stringstream ss(text);
    std::string raw;
    int n = 0;
    while (std::getline(ss, raw)) {
      ++n;
      try {
        Line l = tokenize(raw, n);
        if (!l.tokens.empty() || l.table) lines_.push_back(std::move(l));
      } catch (const SyntaxError& e) {
        errors_.push_back({e.line, e.column, e.what()});
      }
    }
  }

  ParseResult run() {
    Project p;
    std::size_t i = 0;
    while (i < lines_.size()) {
      try {
        i = statement(p, i);
      } catch (const SyntaxError& e) {
        errors_.push_back({e.line, e.column, e.what()});
        i = skip_block(i);
      }
    }
    if (errors_.empty()) resolve(p);
    ParseResult r;
    if (errors_.empty()) r.project = std::move(p);
    r.errors = std::move(errors_);
    return r;
  }

 private:
  std::vector<Line> lines_;
  std::vector<ParseError> errors_;
  std::map<std::string, Where> where_;  // "kind:name" -> declaration site
  std::map<std::string, std::vector<std::pair<std::string, Where>>> entry_sites_;  // decl -> (entry, site)

  std::size_t skip_block(std::size_t i) {
    const auto& head = lines_[i].tokens;
    const bool opens = !head.empty() && (head[0].text == "groupement" || head[0].text == "diagram" ||
                                         head[0].text == "presheaf" || head[0].text == "icon") &&
                       !(head[0].text == "groupement" && head.size() > 2 && head[2].text != "reedy1");
    ++i;
    if (!opens) return i;
    while (i < lines_.size() && !(lines_[i].tokens.size() == 1 && lines_[i].tokens[0].text == "end")) ++i;
    return i + 1;
  }

  void declare(const std::string& ns, const std::string& name, const Line& l, int tok) {
    const std::string key = ns + ":" + name;
    if (where_.count(key)) {
      throw SyntaxError(l.number, l.tokens[static_cast<std::size_t>(tok)].column,
                        ns + " '" + name + "' declared twice (first at line " + std::to_string(where_[key].line) + ")");
    }
    where_[key] = {l.number, l.tokens[static_cast<std::size_t>(tok)].column};
  }

  std::size_t block_end(std::size_t i, const std::string& what) const {
    std::size_t j = i + 1;
    while (j < lines_.size() && !(lines_[j].tokens.size() == 1 && lines_[j].tokens[0].text == "end")) ++j;
    if (j == lines_.size()) throw SyntaxError(lines_[i].number, 1, what + " block has no 'end'");
    return j;
  }

  std::size_t statement(Project& p, std::size_t i) {
    const Line& l = lines_[i];
    if (l.tokens.empty()) throw SyntaxError(l.number, 1, "table outside a block");
    const std::string& kw = l.tokens[0].text;
    if (kw == "base") return base(p, i);
    if (kw == "groupement") return groupement(p, i);
    if (kw == "diagram") return diagram(p, i);
    if (kw == "presheaf") return presheaf(p, i);
    if (kw == "icon") return icon(p, i);
    if (kw == "task") return task(p, i);
    throw SyntaxError(l.number, l.tokens[0].column, "unknown statement '" + kw + "'");
  }

  std::size_t base(Project& p, std::size_t i) {
    const Line& l = lines_[i];
    if (l.tokens.size() < 3) throw SyntaxError(l.number, 1, "expected 'base <name> finset|finvect <p>'");
    BaseDecl b;
    b.name = l.tokens[1].text;
    b.kind = l.tokens[2].text;
    std::size_t k = 3;
    if (b.kind == "finvect") {
      if (l.tokens.size() < 4) throw SyntaxError(l.number, l.tokens[2].column, "finvect needs a prime");
      b.p = to_int(l.tokens[3], l.number);
      if (b.p != 2 && b.p != 3 && b.p != 5 && b.p != 7) throw SyntaxError(l.number, l.tokens[3].column, "unsupported prime");
      k = 4;
    } else if (b.kind == "finset") {
      b.p = 0;
    } else {
      throw SyntaxError(l.number, l.tokens[2].column, "unknown base kind '" + b.kind + "'");
    }
    for (; k < l.tokens.size(); ++k) {
      const auto& t = l.tokens[k];
      const auto eq = t.text.find('=');
      const std::string key = t.text.substr(0, eq);
      if (eq == std::string::npos || (key != "we" && key != "cof" && key != "fib") || !kPredicates.count(t.text.substr(eq + 1))) {
        throw SyntaxError(l.number, t.column, "expected we|cof|fib=all|none|iso|mono|epi");
      }
      b.overrides[key] = t.text.substr(eq + 1);
    }
    declare("base", b.name, l, 1);
    p.bases.push_back(std::move(b));
    return i + 1;
  }

  std::size_t groupement(Project& p, std::size_t i) {
    const Line& l = lines_[i];
    if (l.tokens.size() < 3) throw SyntaxError(l.number, 1, "expected 'groupement <name> <builder> ...'");
    GroupementDecl g;
    g.name = l.tokens[1].text;
    g.builder = l.tokens[2].text;
    std::size_t next = i + 1;
    if (g.builder == "delta_plus") {
      expect_count(l, 4, "groupement <name> delta_plus <m>");
      g.bound = to_int(l.tokens[3], l.number);
    } else if (g.builder == "px") {
      if (l.tokens.size() < 5) throw SyntaxError(l.number, l.tokens[2].column, "expected 'groupement <name> px <m> <x>...'");
      g.bound = to_int(l.tokens[3], l.number);
      for (std::size_t k = 4; k < l.tokens.size(); ++k) g.labels.push_back(l.tokens[k].text);
    } else if (g.builder == "reedy1") {
      expect_count(l, 3, "groupement <name> reedy1");
      const std::size_t end = block_end(i, "reedy1");
      for (std::size_t j = i + 1; j < end; ++j) {
        const Line& e = lines_[j];
        const std::string& w = e.tokens[0].text;
        if (w == "object") {
          expect_count(e, 3, "object <name> <degree>");
          g.reedy.objects.push_back({e.tokens[1].text, to_int(e.tokens[2], e.number)});
        } else if (w == "arrow") {
          expect_count(e, 5, "arrow <name> <src> <dst> direct|inverse|mixed");
          const std::string& c = e.tokens[4].text;
          if (c != "direct" && c != "inverse" && c != "mixed") throw SyntaxError(e.number, e.tokens[4].column, "unknown arrow class");
          g.reedy.arrows.push_back({e.tokens[1].text, e.tokens[2].text, e.tokens[3].text, c});
        } else if (w == "compose") {
          expect_count(e, 4, "compose <f> <g> <g∘f>");
          g.reedy.compose.push_back({e.tokens[1].text, e.tokens[2].text, e.tokens[3].text});
        } else {
          throw SyntaxError(e.number, e.tokens[0].column, "unknown reedy1 entry '" + w + "'");
        }
      }
      next = end + 1;
    } else {
      throw SyntaxError(l.number, l.tokens[2].column, "unknown builder '" + g.builder + "'");
    }
    declare("groupement", g.name, l, 1);
    p.groupements.push_back(std::move(g));
    return next;
  }

  // <kw> <name> on <groupement> over <base> level <k>
  void header(const Line& l, std::string& name, std::string& g, std::string& b, int& level, const std::string& kw) {
    const std::string form = kw + " <name> on <groupement> over <base> level <k>";
    expect_count(l, 8, form);
    expect_word(l, 2, "on", form);
    expect_word(l, 4, "over", form);
    expect_word(l, 6, "level", form);
    name = l.tokens[1].text;
    g = l.tokens[3].text;
    b = l.tokens[5].text;
    level = to_int(l.tokens[7], l.number);
  }

  void site(const std::string& decl, const std::string& entry, const Line& l, int tok) {
    entry_sites_[decl].push_back({entry, {l.number, l.tokens[static_cast<std::size_t>(tok)].column}});
  }

  std::size_t diagram(Project& p, std::size_t i) {
    const Line& l = lines_[i];
    DiagramDecl d;
    header(l, d.name, d.groupement, d.base, d.level, "diagram");
    const std::size_t end = block_end(i, "diagram");
    const std::string key = "diagram:" + d.name;
    for (std::size_t j = i + 1; j < end; ++j) {
      const Line& e = lines_[j];
      if (e.tokens.empty()) throw SyntaxError(e.number, 1, "table without an entry");
      const std::string& w = e.tokens[0].text;
      if (w == "value") {
        expect_count(e, 3, "value <cell> <n>");
        d.values[e.tokens[1].text] = to_int(e.tokens[2], e.number);
        site(key, "cell:" + e.tokens[1].text, e, 1);
      } else if (w == "action") {
        expect_count(e, 2, "action <2-cell> [table]");
        d.actions[e.tokens[1].text] = need_table(e);
        site(key, "two:" + e.tokens[1].text, e, 1);
      } else if (w == "colax") {
        expect_count(e, 3, "colax <s> <t> [table]");
        d.colax[{e.tokens[1].text, e.tokens[2].text}] = need_table(e);
        site(key, "cell:" + e.tokens[1].text, e, 1);
        site(key, "cell:" + e.tokens[2].text, e, 2);
      } else {
        throw SyntaxError(e.number, e.tokens[0].column, "unknown diagram entry '" + w + "'");
      }
    }
    declare("diagram", d.name, l, 1);
    site(key, "groupement:" + d.groupement, l, 3);
    site(key, "base:" + d.base, l, 5);
    p.diagrams.push_back(std::move(d));
    return end + 1;
  }

  std::size_t presheaf(Project& p, std::size_t i) {
    const Line& l = lines_[i];
    PresheafDecl d;
    header(l, d.name, d.groupement, d.base, d.level, "presheaf");
    const std::size_t end = block_end(i, "presheaf");
    const std::string key = "diagram:" + d.name;
    for (std::size_t j = i + 1; j < end; ++j) {
      const Line& e = lines_[j];
      if (e.tokens.empty()) throw SyntaxError(e.number, 1, "table without an entry");
      const std::string& w = e.tokens[0].text;
      if (w == "value") {
        expect_count(e, 3, "value <sequence> <n>");
        d.values[e.tokens[1].text] = to_int(e.tokens[2], e.number);
      } else if (w == "action") {
        expect_count(e, 2, "action <morphism> [table]");
        d.actions[e.tokens[1].text] = need_table(e);
      } else {
        throw SyntaxError(e.number, e.tokens[0].column, "unknown presheaf entry '" + w + "'");
      }
    }
    declare("diagram", d.name, l, 1);
    site(key, "groupement:" + d.groupement, l, 3);
    site(key, "base:" + d.base, l, 5);
    p.presheaves.push_back(std::move(d));
    return end + 1;
  }

  std::size_t icon(Project& p, std::size_t i) {
    const Line& l = lines_[i];
    const std::string form = "icon <name> <src> -> <dst>";
    expect_count(l, 5, form);
    expect_word(l, 3, "->", form);
    IconDecl s;
    s.name = l.tokens[1].text;
    s.src = l.tokens[2].text;
    s.dst = l.tokens[4].text;
    const std::size_t end = block_end(i, "icon");
    const std::string key = "icon:" + s.name;
    for (std::size_t j = i + 1; j < end; ++j) {
      const Line& e = lines_[j];
      if (e.tokens.empty() || e.tokens[0].text != "component") {
        throw SyntaxError(e.number, e.tokens.empty() ? 1 : e.tokens[0].column, "expected 'component <cell> [table]'");
      }
      expect_count(e, 2, "component <cell> [table]");
      s.components[e.tokens[1].text] = need_table(e);
      site(key, "cell:" + e.tokens[1].text, e, 1);
    }
    declare("icon", s.name, l, 1);
    site(key, "diagram:" + s.src, l, 2);
    site(key, "diagram:" + s.dst, l, 4);
    p.icons.push_back(std::move(s));
    return end + 1;
  }

  std::size_t task(Project& p, std::size_t i) {
    const Line& l = lines_[i];
    if (l.tokens.size() < 3) throw SyntaxError(l.number, 1, "expected 'task <id> <kind> key=value...'");
    TaskDecl t;
    t.id = l.tokens[1].text;
    t.kind = l.tokens[2].text;
    t.line = l.number;
    const auto& specs = task_params();
    auto it = specs.find(t.kind);
    if (it == specs.end()) throw SyntaxError(l.number, l.tokens[2].column, "unknown task kind '" + t.kind + "'");
    const std::string key = "task:" + t.id;
    for (std::size_t k = 3; k < l.tokens.size(); ++k) {
      const auto& tok = l.tokens[k];
      const auto eq = tok.text.find('=');
      if (eq == std::string::npos || eq == 0) throw SyntaxError(l.number, tok.column, "expected key=value");
      const std::string name = tok.text.substr(0, eq);
      const auto ps = std::find_if(it->second.begin(), it->second.end(), [&](const ParamSpec& s) { return s.name == name; });
      if (ps == it->second.end()) throw SyntaxError(l.number, tok.column, "task " + t.kind + " has no parameter '" + name + "'");
      t.params[name] = tok.text.substr(eq + 1);
      if (!ps->ref.empty()) {
        const bool list = ps->ref == "diagrams" || ps->ref == "icons";
        const std::string ns = list ? ps->ref.substr(0, ps->ref.size() - 1) : ps->ref;
        for (const auto& v : list ? split_list(t.params[name]) : std::vector<std::string>{t.params[name]}) {
          entry_sites_[key].push_back({ns + ":" + v, {l.number, tok.column}});
        }
      }
    }
    for (const auto& s : it->second) {
      if (s.required && !t.params.count(s.name)) throw SyntaxError(l.number, l.tokens[2].column, "task " + t.kind + " needs '" + s.name + "'");
    }
    declare("task", t.id, l, 1);
    p.tasks.push_back(std::move(t));
    return i + 1;
  }

  void resolve(const Project& p) {
    std::map<std::string, std::shared_ptr<const reedy2::Groupement>> built;
    for (const auto& g : p.groupements) {
      const Where w = where_["groupement:" + g.name];
      try {
        if (g.builder == "delta_plus") {
          built[g.name] = std::make_shared<const reedy2::Groupement>(reedy2::build_delta_plus(g.bound));
        } else if (g.builder == "px") {
          built[g.name] = std::make_shared<const reedy2::Groupement>(reedy2::build_px(g.labels, g.bound));
        }
      } catch (const std::exception& e) {
        errors_.push_back({w.line, w.column, "groupement '" + g.name + "': " + e.what()});
      }
    }
    auto bound_of = [&](const std::string& g) -> std::optional<int> {
      for (const auto& d : p.groupements) {
        if (d.name == g) return d.builder == "reedy1" ? 2 : d.bound;
      }
      return std::nullopt;
    };
    for (const auto& [decl, refs] : entry_sites_) {
      const std::string owner = decl.substr(decl.find(':') + 1);
      for (const auto& [ref, w] : refs) {
        const std::string ns = ref.substr(0, ref.find(':'));
        const std::string name = ref.substr(ref.find(':') + 1);
        if (ns == "cell" || ns == "two") continue;
        if (!where_.count(ref)) {
          errors_.push_back({w.line, w.column, decl.substr(0, decl.find(':')) + " '" + owner + "' references undeclared " + ns + " '" + name + "'"});
        }
      }
    }
    auto check_level = [&](const std::string& name, const std::string& g, int level) {
      auto b = bound_of(g);
      if (b && (level < 0 || level > *b)) {
        const Where w = where_["diagram:" + name];
        errors_.push_back({w.line, w.column, "diagram '" + name + "' has level " + std::to_string(level) +
                                                 " outside the bound " + std::to_string(*b) + " of '" + g + "'"});
      }
    };
    for (const auto& d : p.diagrams) check_level(d.name, d.groupement, d.level);
    for (const auto& d : p.presheaves) check_level(d.name, d.groupement, d.level);
    // Cell names inside diagrams and icons.
    auto groupement_of = [&](const std::string& diagram) -> std::shared_ptr<const reedy2::Groupement> {
      for (const auto& d : p.diagrams) {
        if (d.name == diagram && built.count(d.groupement)) return built[d.groupement];
      }
      return nullptr;
    };
    for (const auto& [decl, refs] : entry_sites_) {
      const std::string ns = decl.substr(0, decl.find(':'));
      const std::string owner = decl.substr(decl.find(':') + 1);
      std::shared_ptr<const reedy2::Groupement> g;
      if (ns == "diagram") g = groupement_of(owner);
      if (ns == "icon") {
        for (const auto& s : p.icons) {
          if (s.name == owner) g = groupement_of(s.src);
        }
      }
      if (!g) continue;
      for (const auto& [ref, w] : refs) {
        const std::string kind = ref.substr(0, ref.find(':'));
        const std::string name = ref.substr(ref.find(':') + 1);
        if (kind == "cell" && !g->find_one_cell(name)) {
          errors_.push_back({w.line, w.column, ns + " '" + owner + "': no 1-cell '" + name + "'"});
        }
        if (kind == "two" && !g->find_two_cell(name)) {
          errors_.push_back({w.line, w.column, ns + " '" + owner + "': no 2-cell '" + name + "'"});
        }
      }
    }
  }
};

void put_table(std::ostringstream& os, const std::vector<int>& t) {
  os << '[';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t[i];
  os << "]\n";
}

std::function<bool(const base::Arrow&)> predicate(const base::Base& b, const std::string& name) {
  if (name == "all") return [](const base::Arrow&) { return true; };
  if (name == "none") return [](const base::Arrow&) { return false; };
  if (name == "iso") return [b](const base::Arrow& f) { return b.is_iso(f); };
  if (name == "mono") return [b](const base::Arrow& f) { return b.injective(f); };
  return [b](const base::Arrow& f) { return b.surjective(f); };
}

reedy2::CellClass parse_class(const std::string& c) {
  if (c == "direct") return reedy2::CellClass::Direct;
  if (c == "inverse") return reedy2::CellClass::Inverse;
  return reedy2::CellClass::Mixed;
}

int cell_id(const reedy2::Groupement& g, const std::string& name, const std::string& where) {
  auto c = g.find_one_cell(name);
  if (!c) throw DomainError(where + ": no 1-cell '" + name + "'");
  return *c;
}

}  // namespace

const std::vector<std::string>& task_kinds() {
  static const std::vector<std::string> k = {"validate", "divisibility", "latch",  "match",  "imap",
                                             "classify", "factor",       "lift",   "limit",  "colimit",
                                             "bridge",   "joyal",        "segal-check", "model-verify"};
  return k;
}

ParseResult parse_project(const std::string& text) { return Parser(text).run(); }

std::string serialize(const Project& p) {
  std::ostringstream os;
  for (const auto& b : p.bases) {
    os << "base " << b.name << ' ' << b.kind;
    if (b.kind == "finvect") os << ' ' << b.p;
    for (const auto& [k, v] : b.overrides) os << ' ' << k << '=' << v;
    os << '\n';
  }
  for (const auto& g : p.groupements) {
    os << "groupement " << g.name << ' ' << g.builder;
    if (g.builder == "reedy1") {
      os << '\n';
      for (const auto& o : g.reedy.objects) os << "  object " << o.name << ' ' << o.degree << '\n';
      for (const auto& a : g.reedy.arrows) os << "  arrow " << a.name << ' ' << a.src << ' ' << a.dst << ' ' << a.cls << '\n';
      for (const auto& c : g.reedy.compose) os << "  compose " << c.f << ' ' << c.g << ' ' << c.h << '\n';
      os << "end\n";
      continue;
    }
    os << ' ' << g.bound;
    for (const auto& x : g.labels) os << ' ' << x;
    os << '\n';
  }
  for (const auto& d : p.diagrams) {
    os << "diagram " << d.name << " on " << d.groupement << " over " << d.base << " level " << d.level << '\n';
    for (const auto& [c, n] : d.values) os << "  value " << c << ' ' << n << '\n';
    for (const auto& [a, t] : d.actions) {
      os << "  action " << a << ' ';
      put_table(os, t);
    }
    for (const auto& [st, t] : d.colax) {
      os << "  colax " << st.first << ' ' << st.second << ' ';
      put_table(os, t);
    }
    os << "end\n";
  }
  for (const auto& d : p.presheaves) {
    os << "presheaf " << d.name << " on " << d.groupement << " over " << d.base << " level " << d.level << '\n';
    for (const auto& [c, n] : d.values) os << "  value " << c << ' ' << n << '\n';
    for (const auto& [a, t] : d.actions) {
      os << "  action " << a << ' ';
      put_table(os, t);
    }
    os << "end\n";
  }
  for (const auto& s : p.icons) {
    os << "icon " << s.name << ' ' << s.src << " -> " << s.dst << '\n';
    for (const auto& [c, t] : s.components) {
      os << "  component " << c << ' ';
      put_table(os, t);
    }
    os << "end\n";
  }
  for (const auto& t : p.tasks) {
    os << "task " << t.id << ' ' << t.kind;
    for (const auto& [k, v] : t.params) os << ' ' << k << '=' << v;
    os << '\n';
  }
  return os.str();
}

Resolved build(const Project& p) {
  Resolved r;
  for (const auto& d : p.bases) {
    base::Base b = d.kind == "finset" ? base::Base::finset() : base::Base::finvect(d.p);
    if (!d.overrides.empty()) {
      auto m = b.model();
      const base::Base plain = b;
      for (const auto& [k, v] : d.overrides) {
        (k == "we" ? m.we : k == "cof" ? m.cof : m.fib) = predicate(plain, v);
      }
      b.set_model(m);
    }
    r.bases.emplace(d.name, b);
  }
  for (const auto& g : p.groupements) {
    if (g.builder == "delta_plus") {
      r.groupements[g.name] = std::make_shared<const reedy2::Groupement>(reedy2::build_delta_plus(g.bound));
    } else if (g.builder == "px") {
      r.groupements[g.name] = std::make_shared<const reedy2::Groupement>(reedy2::build_px(g.labels, g.bound));
    } else {
      reedy2::ReedyCat c;
      std::map<std::string, int> objs;
      for (const auto& o : g.reedy.objects) objs[o.name] = c.add_object(o.name, o.degree);
      auto obj = [&](const std::string& n) {
        auto it = objs.find(n);
        if (it == objs.end()) throw DomainError("groupement '" + g.name + "': no object '" + n + "'");
        return it->second;
      };
      for (const auto& a : g.reedy.arrows) c.add_arrow(obj(a.src), obj(a.dst), a.name, parse_class(a.cls));
      auto arr = [&](const std::string& n) {
        auto a = c.cat.find_arrow(n);
        if (!a) throw DomainError("groupement '" + g.name + "': no arrow '" + n + "'");
        return *a;
      };
      for (const auto& k : g.reedy.compose) c.cat.set_compose(arr(k.f), arr(k.g), arr(k.h));
      const Report v = c.validate();
      if (!v.ok()) throw DomainError("groupement '" + g.name + "' is not Reedy: " + v.first_witness());
      auto cp = std::make_shared<const reedy2::ReedyCat>(std::move(c));
      r.reedy1[g.name] = cp;
      r.groupements[g.name] = std::make_shared<const reedy2::Groupement>(reedy2::build_from_reedy1(*cp));
    }
  }
  for (const auto& d : p.diagrams) {
    const auto& g = r.groupements.at(d.groupement);
    const base::Base& b = r.bases.at(d.base);
    const std::string where = "diagram '" + d.name + "'";
    diagram::ColaxDiagram f(g, b, d.level);
    for (const auto& [c, n] : d.values) {
      const int id = cell_id(*g, c, where);
      if (g->is_unit(id)) {
        if (b.object(n) != b.unit()) throw DomainError(where + ": unit cell '" + c + "' must have the unit value");
        continue;
      }
      if (n < 0) throw DomainError(where + ": negative value at '" + c + "'");
      f.set_value(id, b.object(n));
    }
    for (const auto& [a, t] : d.actions) {
      const int id = *g->find_two_cell(a);
      const auto& tc = g->two_cell(id);
      f.set_action(id, b.arrow(f.value(tc.src), f.value(tc.dst), t));
    }
    for (const auto& [st, t] : d.colax) {
      const int s = cell_id(*g, st.first, where);
      const int u = cell_id(*g, st.second, where);
      auto h = g->hcomp1(s, u);
      if (!h) throw DomainError(where + ": '" + st.first + "' and '" + st.second + "' do not compose");
      f.set_colax(s, u, b.arrow(f.value(*h), b.tensor(f.value(s), f.value(u)), t));
    }
    r.diagrams.emplace(d.name, std::move(f));
  }
  for (const auto& d : p.presheaves) {
    const auto& g = r.groupements.at(d.groupement);
    const base::Base& b = r.bases.at(d.base);
    const std::string where = "presheaf '" + d.name + "'";
    std::vector<std::string> labels;
    for (int o = 0; o < g->object_count(); ++o) labels.push_back(g->object_name(o));
    auto shape = std::make_shared<const segal::DeltaX>(labels, d.level);
    segal::UnitalPresheaf ps(shape, b);
    for (const auto& [seq, n] : d.values) {
      std::optional<int> o;
      for (int k = 0; k < shape->object_count(); ++k) {
        if (shape->name(k) == seq) o = k;
      }
      if (!o) throw DomainError(where + ": no sequence '" + seq + "'");
      ps.values[static_cast<std::size_t>(*o)] = b.object(n);
    }
    for (int o = 0; o < shape->object_count(); ++o) {
      if (d.values.count(shape->name(o))) continue;
      if (shape->dim(o) != 0) throw DomainError(where + ": no value for '" + shape->name(o) + "'");
      ps.values[static_cast<std::size_t>(o)] = b.terminal();
    }
    for (int m = 0; m < shape->morphism_count(); ++m) {
      const auto& mo = shape->morphism(m);
      const base::Object from = ps.values[static_cast<std::size_t>(mo.dst)];
      const base::Object to = ps.values[static_cast<std::size_t>(mo.src)];
      auto it = d.actions.find(shape->morphism_name(m));
      if (it != d.actions.end()) {
        ps.actions[static_cast<std::size_t>(m)] = b.arrow(from, to, it->second);
      } else if (shape->identity(mo.src) == m) {
        ps.actions[static_cast<std::size_t>(m)] = b.identity(from);
      } else if (to == b.terminal()) {
        ps.actions[static_cast<std::size_t>(m)] = b.to_terminal(from);
      } else {
        throw DomainError(where + ": no action for '" + shape->morphism_name(m) + "'");
      }
    }
    r.diagrams.emplace(d.name, segal::from_presheaf(ps, g));
  }
  for (const auto& s : p.icons) {
    const auto& f = r.diagrams.at(s.src);
    const auto& h = r.diagrams.at(s.dst);
    const std::string where = "icon '" + s.name + "'";
    if (f.groupement_ptr() != h.groupement_ptr()) throw DomainError(where + ": endpoints live on different groupements");
    diagram::Icon i(f, h);
    for (const auto& [c, t] : s.components) {
      const int id = cell_id(f.groupement(), c, where);
      i.set(id, f.base().arrow(f.value(id), h.value(id), t));
    }
    r.icons.emplace(s.name, std::move(i));
  }
  return r;
}

}  // namespace colax::cli
