#include "permclass/cli.hpp"

#include "permclass/classify.hpp"
#include "permclass/encodings.hpp"
#include "permclass/genfun.hpp"
#include "permclass/grid.hpp"
#include "permclass/perm.hpp"
#include "permclass/perm_class.hpp"
#include "permclass/rectangles.hpp"
#include "permclass/witness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace permclass {

namespace {

struct Settings {
  std::string format = "tsv";
  bool format_given = false;
  bool exact = false;
  std::optional<int> max_n;
  std::optional<double> budget;
};

class Writer {
 public:
  Writer(std::ostream& out, char delim) : out_(out), delim_(delim) {}
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << delim_;
      out_ << quoted(cells[i]);
    }
    out_ << '\n';
  }
  void line(const std::string& s) { out_ << s << '\n'; }

 private:
  std::string quoted(const std::string& s) const {
    if (s.find(delim_) == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  std::ostream& out_;
  char delim_;
};

std::string str(const BigInt& v) { return v.str(); }

std::string approx(const AlgebraicNumber& a) { return "~" + a.decimal(6); }

std::string spaced(const Perm& p) {
  std::string s;
  for (int i = 1; i <= p.size(); ++i) s += (i > 1 ? " " : "") + std::to_string(p(i));
  return s;
}

std::string joined(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Perm> perms_from(const std::vector<std::string>& texts, const std::string& file) {
  std::vector<Perm> out;
  for (const auto& t : texts) out.push_back(parse_perm(t));
  if (!file.empty()) {
    std::istringstream in(read_file(file));
    auto more = read_perm_list(in);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

GridMatrix matrix_from(const std::string& text, const std::string& file) {
  if (!file.empty()) return parse_matrix(read_file(file));
  if (text.empty()) throw std::invalid_argument("give --matrix or --matrix-file");
  return parse_matrix(text);
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation class toolkit: containment, enumeration, grid classes, growth rates"};
  app.name("permclass");
  Settings cfg;
  app.add_option("--format", cfg.format, "Output delimiter style")->check(CLI::IsMember({"tsv", "csv"}));
  app.add_flag("--exact", cfg.exact, "Also print exact isolating intervals and polynomials");
  app.add_option("--max-n", cfg.max_n, "Largest length to enumerate");
  app.add_option("--budget", cfg.budget, "Wall-clock budget in seconds for enumerations");

  std::function<int(Writer&)> action;
  std::string selftest_module;

  auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->fallthrough();
    g->add_flag_callback("--selftest", [&, name] { selftest_module = name; }, "Run the exhaustive small-n self checks");
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };
  auto budget = [&] { return cfg.budget ? Budget::seconds(*cfg.budget) : Budget{}; };
  auto max_n = [&](int dflt) { return cfg.max_n.value_or(dflt); };

  // ---- perm
  CLI::App* perm = group("perm", "Single-permutation operations");
  std::string pa, pb, sym_name;
  {
    auto* s = leaf(perm, "contains", "Does the pattern embed in the text permutation?");
    s->add_option("pattern", pa)->required();
    s->add_option("text", pb)->required();
    s->callback([&] {
      action = [&](Writer& w) {
        w.line(contains(parse_perm(pa), parse_perm(pb)) ? "true" : "false");
        return 0;
      };
    });
  }
  {
    auto* s = leaf(perm, "simple", "Is the permutation simple?");
    s->add_option("perm", pa)->required();
    s->callback([&] {
      action = [&](Writer& w) {
        w.line(is_simple(parse_perm(pa)) ? "true" : "false");
        return 0;
      };
    });
  }
  {
    auto* s = leaf(perm, "decompose", "Substitution decomposition: skeleton and components");
    s->add_option("perm", pa)->required();
    s->callback([&] {
      action = [&](Writer& w) {
        Perm p = parse_perm(pa);
        if (p.empty()) throw std::invalid_argument("the empty permutation has no decomposition");
        auto d = simple_decomposition(p);
        w.row({"skeleton", d.skeleton.str()});
        for (std::size_t i = 0; i < d.components.size(); ++i)
          w.row({"component", std::to_string(i + 1), d.components[i].str()});
        return 0;
      };
    });
  }
  {
    auto* s = leaf(perm, "graph", "Inversion graph, connectivity and sum indecomposability");
    s->add_option("perm", pa)->required();
    s->callback([&] {
      action = [&](Writer& w) {
        Perm p = parse_perm(pa);
        PermGraph g(p);
        w.row({"vertices", std::to_string(g.vertex_count())});
        w.row({"connected", g.connected() ? "true" : "false"});
        for (auto [i, j] : g.edges()) w.row({"edge", std::to_string(i), std::to_string(j)});
        return 0;
      };
    });
  }
  {
    auto* s = leaf(perm, "symmetry", "Images under the symmetries of the square");
    s->add_option("perm", pa)->required();
    s->add_option("--sym", sym_name, "One symmetry, e.g. reverse or inverse+complement");
    s->callback([&] {
      action = [&](Writer& w) {
        Perm p = parse_perm(pa);
        if (!sym_name.empty()) {
          Symmetry sy = Symmetry::parse(sym_name);
          w.row({sy.name(), sy.apply(p).str()});
        } else {
          for (const auto& sy : Symmetry::all()) w.row({sy.name(), sy.apply(p).str()});
        }
        return 0;
      };
    });
  }

  // ---- class
  CLI::App* cls = group("class", "Permutation classes given by a basis or by generators");
  std::vector<std::string> basis_txt, gens_txt;
  std::string basis_file;
  bool sum_flag = false;
  int u_size = 0;
  auto add_basis = [&](CLI::App* s) {
    s->add_option("--basis", basis_txt, "Basis permutations");
    s->add_option("--basis-file", basis_file, "File with one basis permutation per line");
  };
  auto class_from_args = [&] {
    auto b = perms_from(basis_txt, basis_file);
    if (b.empty()) throw UsageError("give --basis or --basis-file");
    return FiniteBasisClass::normalize(b);
  };
  auto report_counts = [&](Writer& w, const CountSequence& counts, bool complete) {
    for (std::size_t n = 0; n < counts.size(); ++n) w.row({std::to_string(n), str(counts[n])});
    if (!complete) w.line("# incomplete: budget exhausted after n=" + std::to_string(counts.size() - 1));
  };
  {
    auto* s = leaf(cls, "enumerate", "Count members of Av(basis) by length");
    add_basis(s);
    s->callback([&] {
      action = [&](Writer& w) {
        auto e = enumerate(class_from_args(), max_n(8), budget());
        report_counts(w, e.counts, e.complete);
        return 0;
      };
    });
  }
  {
    auto* s = leaf(cls, "growth", "Empirical growth estimate from the enumeration");
    add_basis(s);
    s->callback([&] {
      action = [&](Writer& w) {
        auto e = enumerate(class_from_args(), max_n(9), budget());
        auto g = empirical_growth(e.counts);
        std::ostringstream root;
        root.precision(6);
        root << std::fixed << g.nth_root;
        w.row({"n", std::to_string(g.n)});
        w.row({"ratio", "~" + to_decimal(g.ratio, 6)});
        w.row({"nth-root", "~" + root.str()});
        if (!e.complete) w.line("# incomplete");
        return 0;
      };
    });
  }
  {
    auto* s = leaf(cls, "closure", "Counts of the downset of the generators (or of its sum completion)");
    s->add_option("gens", gens_txt)->required();
    s->add_flag("--sum", sum_flag, "Count the sum completion instead, up to --max-n");
    s->callback([&] {
      action = [&](Writer& w) {
        auto gens = perms_from(gens_txt, "");
        if (sum_flag) {
          report_counts(w, sum_closure_counts(gens, max_n(10)), true);
          return 0;
        }
        auto d = closure(gens);
        CountSequence c(d.max_length() + 1, 0);
        for (const auto& p : d.members()) c[p.size()] += 1;
        report_counts(w, c, true);
        return 0;
      };
    });
  }
  {
    auto* s = leaf(cls, "indecomposables", "Sum indecomposable members by length");
    add_basis(s);
    s->add_option("--gens", gens_txt, "Use the downset of these generators instead of a basis");
    s->callback([&] {
      action = [&](Writer& w) {
        CountSequence c;
        if (!gens_txt.empty()) {
          auto d = closure(perms_from(gens_txt, ""));
          c = sum_indecomposables_in(d, max_n(d.max_length()));
        } else {
          c = sum_indecomposables_in(class_from_args(), max_n(8));
        }
        for (std::size_t n = 1; n < c.size(); ++n) w.row({std::to_string(n), str(c[n])});
        return 0;
      };
    });
  }
  {
    auto* s = leaf(cls, "antichain", "Are the permutations pairwise incomparable?");
    s->add_option("perms", gens_txt);
    s->add_option("--u", u_size, "Test u_1..u_M from the standard infinite antichain");
    s->callback([&] {
      action = [&](Writer& w) {
        auto ps = perms_from(gens_txt, "");
        for (int m = 1; m <= u_size; ++m) ps.push_back(u_antichain(m));
        if (ps.empty()) throw UsageError("give permutations or --u");
        w.line(is_antichain(ps) ? "true" : "false");
        return 0;
      };
    });
  }

  // ---- gf
  CLI::App* gf = group("gf", "Rational generating functions");
  std::string num_txt = "1", den_txt, poly_txt, seq_txt, which = "largest";
  {
    auto* s = leaf(gf, "series", "Taylor coefficients of num/den");
    s->add_option("--num", num_txt);
    s->add_option("--den", den_txt)->required();
    s->callback([&] {
      action = [&](Writer& w) {
        RationalGF f(parse_poly(num_txt), parse_poly(den_txt));
        auto c = series(f, max_n(10));
        for (std::size_t n = 0; n < c.size(); ++n) w.row({std::to_string(n), str(c[n])});
        return 0;
      };
    });
  }
  {
    auto* s = leaf(gf, "sumclosure", "1/(1-f) for the indecomposable GF f, or for a sequence spec");
    s->add_option("--poly", poly_txt, "f as a polynomial vanishing at 0");
    s->add_option("--seq", seq_txt, "Sum indecomposable counts, e.g. 1,1,2x3,4 or 1xinf");
    s->callback([&] {
      action = [&](Writer& w) {
        RationalGF f;
        if (!seq_txt.empty()) f = seq_to_gf(parse_sequence(seq_txt));
        else if (!poly_txt.empty()) f = sum_completion_gf(parse_poly(poly_txt));
        else throw UsageError("give --poly or --seq");
        w.row({"gf", f.str()});
        w.row({"growth", approx(pringsheim_growth(f))});
        if (cfg.max_n) {
          auto c = series(f, *cfg.max_n);
          for (std::size_t n = 0; n < c.size(); ++n) w.row({std::to_string(n), str(c[n])});
        }
        return 0;
      };
    });
  }
  {
    auto* s = leaf(gf, "growth", "Growth rate of num/den by Pringsheim's theorem");
    s->add_option("--num", num_txt);
    s->add_option("--den", den_txt)->required();
    s->callback([&] {
      action = [&](Writer& w) {
        RationalGF f(parse_poly(num_txt), parse_poly(den_txt));
        auto g = pringsheim_growth(f);
        w.line(approx(g));
        if (cfg.exact) {
          w.row({"polynomial", g.poly().str()});
          w.row({"interval", g.refined(Rational(1, BigInt(1000000000))).interval_str()});
        }
        return 0;
      };
    });
  }
  {
    auto* s = leaf(gf, "root", "Certified real roots of a polynomial");
    s->add_option("--poly", poly_txt)->required();
    s->add_option("--which", which)->check(CLI::IsMember({"largest", "smallest", "all"}));
    s->callback([&] {
      action = [&](Writer& w) {
        Poly p = parse_poly(poly_txt);
        std::vector<AlgebraicNumber> roots;
        if (which == "largest") roots.push_back(largest_positive_root(p));
        else if (which == "smallest") roots.push_back(smallest_positive_root(p));
        else roots = real_roots(p);
        for (const auto& r : roots) {
          if (cfg.exact) w.row({approx(r), r.refined(Rational(1, BigInt(1000000000))).interval_str()});
          else w.line(approx(r));
        }
        return 0;
      };
    });
  }

  // ---- grid
  CLI::App* grid = group("grid", "Generalized grid classes");
  std::string matrix_txt, matrix_file, d_preset;
  std::vector<std::string> d_txt, sumcl_txt, skewcl_txt;
  bool all_flag = false;
  auto add_matrix = [&](CLI::App* s) {
    s->add_option("--matrix", matrix_txt, "Matrix rows separated by '/', top row first");
    s->add_option("--matrix-file", matrix_file, "Matrix file, one row per line");
  };
  auto gridding_row = [](const Gridding& g) { return std::vector<std::string>{joined(g.cols), joined(g.rows)}; };
  {
    auto* s = leaf(grid, "gridding", "Find a gridding of a permutation");
    add_matrix(s);
    s->add_option("perm", pa)->required();
    s->add_flag("--all", all_flag, "List every gridding");
    s->callback([&] {
      action = [&](Writer& w) {
        auto m = matrix_from(matrix_txt, matrix_file);
        Perm p = parse_perm(pa);
        std::vector<Gridding> gs;
        if (all_flag) gs = all_griddings(p, m);
        else if (auto g = find_gridding(p, m)) gs.push_back(*g);
        if (gs.empty()) w.line("none");
        for (const auto& g : gs) w.row(gridding_row(g));
        return 0;
      };
    });
  }
  {
    auto* s = leaf(grid, "enumerate", "Gridded and plain counts by length");
    add_matrix(s);
    s->callback([&] {
      action = [&](Writer& w) {
        auto e = enumerate_gridded(matrix_from(matrix_txt, matrix_file), max_n(7), false, budget());
        for (std::size_t n = 0; n < e.gridded.size(); ++n)
          w.row({std::to_string(n), str(e.gridded[n]), str(e.plain[n])});
        if (!e.complete) w.line("# incomplete");
        return 0;
      };
    });
  }
  {
    auto* s = leaf(grid, "graph", "Cell graph of the matrix and its components");
    add_matrix(s);
    s->callback([&] {
      action = [&](Writer& w) {
        auto m = matrix_from(matrix_txt, matrix_file);
        auto g = graph_of_matrix(m);
        auto cell = [](const Cell& c) { return std::to_string(c.col) + ":" + std::to_string(c.row); };
        for (const auto& v : g.vertices) w.row({"vertex", cell(v)});
        for (auto [a, b] : g.edges) w.row({"edge", cell(g.vertices[a]), cell(g.vertices[b])});
        auto comps = component_cells(m);
        for (std::size_t i = 0; i < comps.size(); ++i) {
          std::string cells;
          for (const auto& c : comps[i]) cells += (cells.empty() ? "" : " ") + cell(c);
          w.row({"component", std::to_string(i + 1), cells});
        }
        return 0;
      };
    });
  }
  {
    auto* s = leaf(grid, "forest", "Is the cell graph a forest?");
    add_matrix(s);
    s->callback([&] {
      action = [&](Writer& w) {
        w.line(is_forest(matrix_from(matrix_txt, matrix_file)) ? "true" : "false");
        return 0;
      };
    });
  }
  {
    auto* s = leaf(grid, "griddable", "Is the class D-griddable for the given basis of D?");
    add_basis(s);
    s->add_option("--sumcl", sumcl_txt, "Class is the sum completion of these generators");
    s->add_option("--skewcl", skewcl_txt, "Class is the skew completion of these generators");
    s->add_option("--d-basis", d_txt, "Basis of D");
    s->add_option("--d", d_preset, "Preset D: monotone or wo")->check(CLI::IsMember({"monotone", "wo"}));
    s->callback([&] {
      action = [&](Writer& w) {
        std::optional<ClassSpec> c;
        if (!sumcl_txt.empty()) c = SumClosureClass(perms_from(sumcl_txt, ""));
        else if (!skewcl_txt.empty()) c = SkewClosureClass(perms_from(skewcl_txt, ""));
        else c = class_from_args();
        std::vector<Perm> d = perms_from(d_txt, "");
        if (d_preset == "monotone") d = {Perm{1, 2}, Perm{2, 1}};
        if (d_preset == "wo") d = basis_WO();
        if (d.empty()) throw UsageError("give --d-basis or --d");
        auto r = is_D_griddable(*c, d);
        w.row({"griddable", r.griddable ? "true" : "false"});
        if (!r.griddable) {
          w.row({"beta", r.beta->str()});
          w.row({"direction", *r.direction == SumDirection::Sum ? "sum" : "skew"});
        }
        return 0;
      };
    });
  }

  // ---- encode
  CLI::App* enc = group("encode", "Word encodings of gridded alternation classes");
  std::string word, enc_perm;
  std::optional<int> count_n;
  for (const std::string kind : {"par", "hook", "31"}) {
    auto* s = leaf(enc, kind, "Encode with --perm, decode with --word, count with --count");
    s->add_option("--word", word);
    s->add_option("--perm", enc_perm);
    s->add_option("--count", count_n, "Count accepted words by weight up to N");
    s->callback([&, kind] {
      action = [&, kind](Writer& w) {
        auto matrix = kind == "par" ? parallel_matrix() : kind == "hook" ? hook_matrix() : three_one_matrix();
        auto encode = kind == "par" ? encode_parallel : kind == "hook" ? encode_hook : encode_31;
        auto decode = kind == "par" ? decode_parallel : kind == "hook" ? decode_hook : decode_31;
        auto lang = kind == "par" ? parallel_language() : kind == "hook" ? hook_language() : three_one_language();
        if (count_n) {
          auto c = count_language(lang, *count_n);
          for (std::size_t n = 0; n < c.size(); ++n) w.row({std::to_string(n), str(c[n])});
          return 0;
        }
        auto emit = [&](const Word& wd, const Perm& p, const Gridding& g) {
          auto cells = gridding_row(g);
          w.row({wd, p.str(), cells[0], cells[1]});
        };
        if (!word.empty()) {
          auto gp = decode(word);
          emit(word, gp.perm, gp.gridding);
        } else if (!enc_perm.empty()) {
          Perm p = parse_perm(enc_perm);
          auto gs = all_griddings(p, matrix);
          if (gs.empty()) throw std::domain_error(p.str() + " has no gridding in this class");
          for (const auto& g : gs) {
            try {
              emit(encode(p, g), p, g);
            } catch (const std::domain_error&) {
              w.row({"-", p.str(), joined(g.cols), joined(g.rows)});
            }
          }
        } else {
          throw UsageError("give --word, --perm or --count");
        }
        return 0;
      };
    });
  }

  // ---- witness
  CLI::App* wit = group("witness", "Witness family members");
  std::string family;
  int m_param = 0;
  bool list_flag = false;
  wit->add_option("family", family);
  wit->add_option("m", m_param);
  wit->add_option("--sym", sym_name, "Apply a symmetry");
  wit->add_flag("--list", list_flag, "List family names");
  wit->callback([&] {
    if (!selftest_module.empty()) return;
    action = [&](Writer& w) {
      if (list_flag) {
        for (const auto& f : witness_family_names()) w.line(f);
        return 0;
      }
      if (family.empty() || m_param < 1) throw UsageError("usage: witness <family> <m>, m >= 1");
      w.line(spaced(witness_by_name(family, m_param, Symmetry::parse(sym_name))));
      return 0;
    };
  });

  // ---- families
  CLI::App* fam = group("families", "The growth rates below kappa");
  int max_k = 6, max_l = 6;
  std::string bound = "kappa";
  {
    auto* s = leaf(fam, "list", "Family values below the bound");
    s->add_option("--max-k", max_k);
    s->add_option("--max-l", max_l);
    s->add_option("--bound", bound, "kappa or a rational number");
    s->callback([&] {
      action = [&](Writer& w) {
        auto rates = list_subkappa_rates(max_k, max_l);
        std::optional<Rational> cut;
        if (bound != "kappa") cut = parse_rational(bound);
        w.row({"family", "k", "l", "polynomial", "value", "interval"});
        for (const auto& e : rates) {
          if (cut && compare(e.value, *cut) >= 0) continue;
          w.row({family_name(e.family), e.k < 0 ? "" : std::to_string(e.k), e.ell < 0 ? "" : std::to_string(e.ell),
                 e.poly.str(), approx(e.value), e.value.refined(Rational(1, BigInt(10000000))).interval_str()});
        }
        return 0;
      };
    });
  }
  {
    auto* s = leaf(fam, "accumulation", "Monotone approach of V to VI and of VI to kappa");
    s->add_option("--max-k", max_k);
    s->add_option("--max-l", max_l);
    s->callback([&] {
      action = [&](Writer& w) {
        auto rep = accumulation_scan(max_k, max_l);
        for (const auto& r : rep.rows) {
          std::ostringstream gap;
          gap.precision(3);
          gap << std::scientific << r.gap;
          w.row({r.label, approx(r.value), "~" + gap.str(), r.increasing ? "increasing" : "NOT increasing"});
        }
        bool ok = rep.v_monotone && rep.vi_monotone && rep.below_limits;
        w.row({"monotone", ok ? "true" : "false"});
        return ok ? 0 : 1;
      };
    });
  }
  {
    auto* s = leaf(fam, "large", "Is the sum indecomposable sequence large (growth >= kappa)?");
    s->add_option("seq", seq_txt)->required();
    s->callback([&] {
      action = [&](Writer& w) {
        auto spec = parse_sequence(seq_txt);
        w.row({"large", is_large(spec) ? "true" : "false"});
        w.row({"growth", approx(pringsheim_growth(seq_to_gf(spec)))});
        return 0;
      };
    });
  }

  // ---- decide-kappa
  CLI::App* dk = group("decide-kappa", "Is the growth rate of Av(basis) below kappa?");
  add_basis(dk);
  dk->callback([&] {
    if (!selftest_module.empty()) return;
    action = [&](Writer& w) {
      auto v = decide_sub_kappa(class_from_args());
      w.row({"verdict", v.below_kappa ? "LtKappa" : "GeKappa"});
      for (const auto& x : v.witnesses) w.row({"witness", x.condition, x.detail});
      if (cfg.exact)
        for (const auto& c : v.checks) w.row({"check", c.name, c.passed ? "pass" : "fail"});
      return 0;
    };
  });

  // ---- rect
  CLI::App* rect = group("rect", "Slicing axis-parallel rectangles");
  std::string rect_file;
  {
    auto* s = leaf(rect, "slice", "Lines slicing every rectangle");
    s->add_option("file", rect_file)->required();
    s->callback([&] {
      action = [&](Writer& w) {
        std::istringstream in(read_file(rect_file));
        auto rs = read_rects(in);
        auto lines = slice_rectangles(rs);
        int alpha = independence_number(rs);
        bool all_sliced = std::all_of(rs.begin(), rs.end(), [&](const Rect& r) {
          return std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return slices(l, r); });
        });
        w.row({"rectangles", std::to_string(rs.size())});
        w.row({"independence", std::to_string(alpha)});
        w.row({"bound", std::to_string(slicing_bound(alpha))});
        w.row({"lines", std::to_string(lines.size())});
        w.row({"all-sliced", all_sliced ? "true" : "false"});
        for (const auto& l : lines) w.row({"line", l.str()});
        return 0;
      };
    });
  }

  std::vector<std::string> argv_store{"permclass"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  cfg.format_given = app.count("--format") > 0;
  if (!cfg.format_given && app.got_subcommand("families")) cfg.format = "csv";
  Writer w(out, cfg.format == "csv" ? ',' : '\t');

  try {
    if (!selftest_module.empty()) {
      auto rep = run_selftest(selftest_module);
      for (const auto& f : rep.failures) w.row({"FAIL", f});
      w.row({"selftest", selftest_module, "passed " + std::to_string(rep.passed),
             "failed " + std::to_string(rep.failed)});
      return rep.failed == 0 ? 0 : 1;
    }
    if (!action) {
      err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return 2;
    }
    return action(w);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace permclass
