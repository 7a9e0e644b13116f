#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "magn/errors.hpp"
#include "magn/hopf.hpp"
#include "magn/prim.hpp"
#include "magn/sabinin.hpp"
#include "magn/series.hpp"
#include "magn/symfun.hpp"

namespace magn::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string bound_text = "2";
  std::size_t n = 3;
  std::size_t max_degree = 0;  // 0: command default
  std::string vars;
  std::string format = "text";
  std::size_t cell_cap = PrimOptions{}.cell_cap;
  unsigned threads = 1;
  std::uint64_t seed = 20240101;

  ArityBound bound() const { return ArityBound::parse(bound_text); }
  PrimOptions prim_options() const {
    PrimOptions o;
    o.cell_cap = cell_cap;
    return o;
  }
  std::size_t degree_or(std::size_t fallback) const { return max_degree ? max_degree : fallback; }
};

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return to_string(v);
}

json rational_json(const Rational& v) {
  if (is_integral(v)) return integer_json(v.get_num());
  return to_string(v);
}

// "x1,x1,x2" -> {1,1,2}
std::vector<Label> parse_vars(const std::string& text) {
  std::vector<Label> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    Tree t = parse_tree(item);
    if (!t.is_leaf()) throw ParseError("expected a variable x<k>", pos);
    out.push_back(t.label());
    pos = comma + 1;
  }
  if (out.empty()) throw ParseError("empty variable list", 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t distinct_count(const std::vector<Label>& labels) {
  return std::set<Label>(labels.begin(), labels.end()).size();
}

json labels_json(const std::vector<Label>& labels) {
  json arr = json::array();
  for (Label l : labels) arr.push_back("x" + std::to_string(l));
  return arr;
}

int cmd_trees(const RunConfig& cfg, std::ostream& out) {
  ArityBound bound = cfg.bound();
  std::vector<Tree> shapes = enumerate_shapes(cfg.n, bound);
  if (cfg.format == "json") {
    json trees = json::array();
    for (const Tree& t : shapes) trees.push_back(format_tree(t));
    out << json{{"schema", 1}, {"n", cfg.n}, {"bound", bound.to_string()}, {"count", shapes.size()}, {"trees", trees}}.dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << "index,tree\n";
    for (std::size_t i = 0; i < shapes.size(); ++i) out << i + 1 << ",\"" << format_tree(shapes[i]) << "\"\n";
  } else {
    for (const Tree& t : shapes) out << format_tree(t) << "\n";
    out << "count " << shapes.size() << "\n";
  }
  return kOk;
}

int cmd_sequences(const RunConfig& cfg, std::ostream& out) {
  ArityBound bound = cfg.bound();
  std::size_t m = cfg.degree_or(10);
  std::vector<Integer> c = bounded_sequence(bound, m);
  std::vector<Integer> cp = log_bounded_sequence(bound, m);
  std::vector<Integer> dims;
  for (std::size_t n = 1; n <= m; ++n) dims.push_back(prim_dim_formula(n, bound));
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < m; ++i)
      rows.push_back({{"n", i + 1}, {"count", integer_json(c[i])}, {"log_count", integer_json(cp[i])},
                      {"prim_dim", integer_json(dims[i])}});
    out << json{{"schema", 1}, {"bound", bound.to_string()}, {"rows", rows}}.dump(2) << "\n";
  } else {
    const char* sep = cfg.format == "csv" ? "," : " ";
    out << "n" << sep << "count" << sep << "log_count" << sep << "prim_dim\n";
    for (std::size_t i = 0; i < m; ++i)
      out << i + 1 << sep << to_string(c[i]) << sep << to_string(cp[i]) << sep << to_string(dims[i]) << "\n";
  }
  return kOk;
}

int cmd_coproduct(const RunConfig& cfg, const std::string& literal, std::ostream& out) {
  ArityBound bound = cfg.bound();
  TensorElement d = coproduct(parse_element(literal, bound));
  if (cfg.format == "json")
    out << json{{"schema", 1}, {"bound", bound.to_string()}, {"input", literal}, {"coproduct", format_tensor(d)}}.dump(2)
        << "\n";
  else
    out << format_tensor(d) << "\n";
  return kOk;
}

int cmd_shuffle(const RunConfig& cfg, const std::string& lhs, const std::string& rhs, std::ostream& out) {
  ArityBound bound = cfg.bound();
  Element s = shuffle(parse_element(lhs, bound), parse_element(rhs, bound));
  if (cfg.format == "json")
    out << json{{"schema", 1}, {"bound", bound.to_string()}, {"left", lhs}, {"right", rhs}, {"shuffle", format_element(s)}}
               .dump(2)
        << "\n";
  else
    out << format_element(s) << "\n";
  return kOk;
}

int cmd_prim(const RunConfig& cfg, std::ostream& out) {
  ArityBound bound = cfg.bound();
  std::vector<Label> labels;
  if (cfg.vars.empty()) {
    for (std::size_t i = 1; i <= cfg.n; ++i) labels.push_back(static_cast<Label>(i));
  } else {
    labels = parse_vars(cfg.vars);
  }
  Basis b = primitive_basis(labels, bound, cfg.prim_options());
  if (cfg.format == "json") {
    json basis = json::array();
    for (const Element& v : b.vectors) basis.push_back(format_element(v));
    out << json{{"schema", 1},
                {"n", b.degree()},
                {"bound", bound.to_string()},
                {"labels", labels_json(b.labels)},
                {"dimension", b.dimension()},
                {"basis", basis}}
               .dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << "index,element\n";
    for (std::size_t i = 0; i < b.vectors.size(); ++i) out << i + 1 << ",\"" << format_element(b.vectors[i]) << "\"\n";
  } else {
    out << "dimension " << b.dimension() << "\n";
    for (const Element& v : b.vectors) out << format_element(v) << "\n";
  }
  return kOk;
}

int cmd_character(const RunConfig& cfg, std::ostream& out) {
  ArityBound bound = cfg.bound();
  std::map<Partition, Rational> chi = character(cfg.n, bound, cfg.prim_options());
  std::map<Partition, Rational> schur = to_schur(from_class_function(chi));
  std::map<Partition, Rational> formula = to_schur(ch_prim(static_cast<unsigned>(cfg.n), bound));
  bool agree = schur == formula;
  if (cfg.format == "json") {
    json values = json::object();
    for (const auto& [lambda, v] : chi) values[lambda.to_string()] = rational_json(v);
    json coeffs = json::object();
    for (const auto& [mu, v] : schur) coeffs[mu.to_string()] = rational_json(v);
    out << json{{"schema", 1},         {"n", cfg.n},        {"bound", bound.to_string()}, {"character", values},
                {"schur", coeffs},     {"schur_text", format_schur(schur)}, {"matches_formula", agree}}
               .dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << "kind,partition,value\n";
    for (const auto& [lambda, v] : chi) out << "character,\"" << lambda.to_string() << "\"," << to_string(v) << "\n";
    for (const auto& [mu, v] : schur) out << "schur,\"" << mu.to_string() << "\"," << to_string(v) << "\n";
  } else {
    out << format_schur(schur) << "\n";
    for (const auto& [lambda, v] : chi) out << "chi" << lambda.to_string() << " = " << to_string(v) << "\n";
    out << (agree ? "matches" : "differs from") << " the characteristic formula\n";
  }
  return agree ? kOk : kCheckFailed;
}

// ---- verify ----

struct CheckLine {
  std::string name;
  bool ok;
  std::string detail;
};

Element random_element(std::mt19937_64& rng, std::size_t degree, std::size_t vars, ArityBound bound) {
  std::vector<Tree> basis = homogeneous_basis(degree, vars, bound);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Element e(bound);
  for (int i = 0; i < 3; ++i) e.add_term(basis[pick(rng)], coeff(rng));
  return e;
}

// sum of <g1 (x) g2, Delta f> over bihomogeneous slices
Rational adjoint_pairing(const Element& g1, const Element& g2, const Element& f) {
  return pairing(tensor(g1, g2), coproduct(f));
}

std::vector<CheckLine> run_verify(const RunConfig& cfg) {
  ArityBound bound = cfg.bound();
  std::size_t deg = cfg.degree_or(4);
  std::size_t vars = cfg.vars.empty() ? 2 : distinct_count(parse_vars(cfg.vars));
  PrimOptions opts = cfg.prim_options();
  std::vector<CheckLine> lines;

  HopfReport hopf = verify_hopf_axioms(bound, vars, deg);
  lines.push_back({"hopf axioms", hopf.ok,
                   hopf.ok ? std::to_string(hopf.monomials_checked) + " monomials" : hopf.failure});

  {
    std::vector<Integer> cp = log_bounded_sequence(ArityBound::finite(2), 10);
    std::vector<long> expected{1, 1, 4, 13, 46, 166, 610, 2269, 8518, 32206};
    bool ok = true;
    for (std::size_t i = 0; i < 10; ++i) ok = ok && cp[i] == expected[i];
    std::vector<Integer> c = catalan_sequence(7);
    std::vector<long> parity{0, 1, 2, 7, 24, 86, 314};
    for (std::size_t i = 0; i < 7; ++i) ok = ok && Integer(static_cast<long>(i + 1)) * c[i] - cp[i] == parity[i];
    Series t = Series::variable(10);
    Series closed2 = log1p(Rational(1, 2) * (Series::constant(1, 10) - sqrt1p(Rational(-4) * t)));
    Series f6 = Rational(-6) * t + t * t;
    Series closedw = log1p(Rational(1, 4) * (t + Series::constant(1, 10) - sqrt1p(f6)));
    ok = ok && prim_generating_series(ArityBound::finite(2), 10) == closed2 &&
         prim_generating_series(ArityBound::omega(), 10) == closedw;
    lines.push_back({"series identities", ok, ""});
  }

  {
    std::size_t top = std::min<std::size_t>(deg, 4);
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= top; ++n) {
      std::size_t k = primitive_dimension_multilinear(n, bound, opts);
      Integer f = prim_dim_formula(n, bound);
      detail += (n > 1 ? " " : "") + std::to_string(k);
      ok = ok && f == static_cast<unsigned long>(k);
    }
    lines.push_back({"dimension formula", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    auto check = [&](const std::vector<Label>& labels) {
      Basis p = primitive_basis(labels, bound, opts);
      std::vector<Basis> lower = lower_primitive_bases(labels, bound, opts);
      std::vector<Element> comp = pbw_complement_basis(labels, bound, lower);
      std::vector<Element> all = p.vectors;
      all.insert(all.end(), comp.begin(), comp.end());
      bool full = all.size() == p.ambient.size() && rank(all) == p.ambient.size();
      bool orth = true;
      for (const Element& v : p.vectors)
        for (const Element& w : comp) orth = orth && pairing(v, w) == 0;
      ok = ok && full && orth;
    };
    for (std::size_t n = 1; n <= deg; ++n) check(std::vector<Label>(n, 1));
    for (std::size_t n = 2; n <= std::min<std::size_t>(deg, 4); ++n) {
      std::vector<Label> labels;
      for (std::size_t i = 1; i <= n; ++i) labels.push_back(static_cast<Label>(i));
      check(labels);
    }
    lines.push_back({"pbw complement", ok, ""});
  }

  {
    struct Table {
      unsigned n;
      ArityBound bound;
      std::vector<long> coeffs;
    };
    std::vector<Table> tables{{3, ArityBound::finite(2), {1, 3, 1}},
                              {4, ArityBound::finite(2), {3, 10, 6, 10, 3}},
                              {3, ArityBound::omega(), {2, 5, 2}},
                              {4, ArityBound::omega(), {8, 25, 16, 25, 8}}};
    bool ok = true;
    for (const Table& tab : tables) {
      std::map<Partition, Rational> s = to_schur(ch_prim(tab.n, tab.bound));
      std::vector<Partition> parts = partitions(tab.n);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto it = s.find(parts[i]);
        ok = ok && it != s.end() && it->second == tab.coeffs[i];
      }
      ok = ok && s.size() == parts.size();
    }
    for (unsigned n = 1; n <= std::min<std::size_t>(deg, 4); ++n)
      ok = ok && from_class_function(character(n, bound, opts)) == ch_prim(n, bound);
    lines.push_back({"schur tables", ok, ""});
  }

  {
    DescriptionReport r = verify_degree4_description(opts);
    std::string detail = std::to_string(r.rank_commutator_span) + " " + std::to_string(r.rank_with_angle_words) + " " +
                         std::to_string(r.rank_total);
    for (const Claim& c : r.claims)
      if (!c.ok) detail += "; " + c.name + ": " + c.detail;
    lines.push_back({"degree 4 description", r.ok(), detail});
  }

  {
    std::mt19937_64 rng(cfg.seed);
    bool ok = true;
    for (int trial = 0; trial < 5; ++trial) {
      Element f = random_element(rng, 1 + trial % 2, vars, bound);
      Element g = random_element(rng, 1 + (trial + 1) % 2, vars, bound);
      Element h = random_element(rng, 1, vars, bound);
      ok = ok && shuffle(f, g) == shuffle(g, f);
      ok = ok && shuffle(shuffle(f, g), h) == shuffle(f, shuffle(g, h));
      Element fg = shuffle(f, g);
      for (const auto& [t, c] : fg.terms())
        ok = ok && pairing(fg, Element::monomial(t, bound)) == adjoint_pairing(f, g, Element::monomial(t, bound));
    }
    lines.push_back({"shuffle laws", ok, "seed " + std::to_string(cfg.seed)});
  }
  return lines;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<CheckLine> lines = run_verify(cfg);
  bool ok = std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
  if (cfg.format == "json") {
    json checks = json::array();
    for (const CheckLine& l : lines) checks.push_back({{"name", l.name}, {"ok", l.ok}, {"detail", l.detail}});
    out << json{{"schema", 1}, {"bound", cfg.bound().to_string()}, {"ok", ok}, {"checks", checks}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "check,ok,detail\n";
    for (const CheckLine& l : lines) out << "\"" << l.name << "\"," << (l.ok ? "true" : "false") << ",\"" << l.detail << "\"\n";
  } else {
    for (const CheckLine& l : lines) {
      out << (l.ok ? "PASS " : "FAIL ") << l.name;
      if (!l.detail.empty()) out << " (" << l.detail << ")";
      out << "\n";
    }
  }
  return ok ? kOk : kCheckFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--bound", cfg.bound_text, "Arity bound: 2, 3, ... or omega")
      ->check(CLI::Validator(
          [](std::string& text) {
            try {
              ArityBound::parse(text);
            } catch (const Error& e) {
              return std::string(e.what());
            }
            return std::string();
          },
          "BOUND"));
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--cell-cap", cfg.cell_cap, "Maximal number of matrix cells");
  sub->add_option("--threads", cfg.threads, "Worker threads (output does not depend on it)");
  sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in free Mag_N-algebras", "magn"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string lhs;
  std::string rhs;

  auto* trees = app.add_subcommand("trees", "List reduced planar tree shapes");
  add_common(trees, cfg);
  trees->add_option("--n", cfg.n, "Number of leaves")->check(CLI::PositiveNumber);

  auto* seq = app.add_subcommand("sequences", "Tree counts, log-derived counts and primitive dimensions");
  add_common(seq, cfg);
  seq->add_option("--max-degree", cfg.max_degree, "Largest n")->check(CLI::PositiveNumber);

  auto* cop = app.add_subcommand("coproduct", "Diagonal coproduct of an element");
  add_common(cop, cfg);
  cop->add_option("element", lhs, "Element literal")->required();

  auto* sh = app.add_subcommand("shuffle", "Shuffle product of two elements");
  add_common(sh, cfg);
  sh->add_option("left", lhs, "Element literal")->required();
  sh->add_option("right", rhs, "Element literal")->required();

  auto* prim = app.add_subcommand("prim", "Basis of primitive elements");
  add_common(prim, cfg);
  prim->add_option("--n", cfg.n, "Degree of the multilinear component")->check(CLI::PositiveNumber);
  prim->add_option("--vars", cfg.vars, "Leaf-label multiset, e.g. x1,x1,x2");

  auto* chr = app.add_subcommand("character", "Character and Schur decomposition of Prim Mag_N(n)");
  add_common(chr, cfg);
  chr->add_option("--n", cfg.n, "Arity")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Run the verification suites");
  add_common(ver, cfg);
  ver->add_option("--max-degree", cfg.max_degree, "Degree limit for the suites")->check(CLI::PositiveNumber);
  ver->add_option("--vars", cfg.vars, "Variables for the Hopf checks, e.g. x1,x2");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("magn");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*trees) return cmd_trees(cfg, out);
    if (*seq) return cmd_sequences(cfg, out);
    if (*cop) return cmd_coproduct(cfg, lhs, out);
    if (*sh) return cmd_shuffle(cfg, lhs, rhs, out);
    if (*prim) return cmd_prim(cfg, out);
    if (*chr) return cmd_character(cfg, out);
    if (*ver) return cmd_verify(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kUsage;
}

}  // namespace magn::cli
