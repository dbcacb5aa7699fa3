#include "flagdegen/catalog.hpp"
#include "flagdegen/degenchecks.hpp"
#include "flagdegen/essmonoid.hpp"
#include "flagdegen/lspaths.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace flagdegen;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return z.convert_to<std::int64_t>();
  return z.str();
}

Integer integer_of(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw UsageError("expected an integer, got " + j.dump());
}

json weight_json(const Weight& w) {
  json out = json::array();
  for (int i = 0; i < w.rank(); ++i) out.push_back(w[i]);
  return out;
}

json points_json(const std::vector<IntPoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(p);
  return out;
}

json polytope_json(const RationalPolytope& P) {
  json rows = json::array();
  for (const auto& r : P.inequalities()) {
    json row = json::array();
    for (Eigen::Index k = 0; k < r.size(); ++k) row.push_back(integer_json(r[k]));
    rows.push_back(row);
  }
  return {{"dim", P.dim()}, {"ineqs", rows}};
}

RationalPolytope polytope_of(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("ineqs")) throw UsageError("polytope JSON needs dim and ineqs");
  const int d = j.at("dim").get<int>();
  std::vector<IntVec> rows;
  for (const auto& r : j.at("ineqs")) {
    if (!r.is_array() || static_cast<int>(r.size()) != d + 1) throw UsageError("inequality rows need dim + 1 entries");
    IntVec v(d + 1);
    for (int k = 0; k <= d; ++k) v[k] = integer_of(r[k]);
    rows.push_back(v);
  }
  return RationalPolytope(d, rows);
}

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

Weight parse_weight(const std::string& text) {
  std::vector<int> c;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoi(item, &used));
      if (used != item.size()) throw UsageError("bad weight entry '" + item + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad weight entry '" + item + "'");
    }
  }
  if (c.empty()) throw UsageError("--weight is required");
  return Weight(Eigen::Map<Eigen::VectorXi>(c.data(), static_cast<Eigen::Index>(c.size())));
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::logic_error&) {
      throw UsageError("bad list entry '" + item + "'");
    }
  }
  return out;
}

// Shared options describing a root system and a weight.
struct GroupArgs {
  std::string type = "A";
  int rank = 0;
  std::string weight;

  void attach(CLI::App* app, bool with_weight = true) {
    app->add_option("--type", type, "Cartan type A, C or G")->check(CLI::IsMember({"A", "C", "G"}));
    app->add_option("--rank", rank, "Lie rank, or n for SL_n");
    if (with_weight) app->add_option("--weight", weight, "fundamental-weight coordinates, comma separated");
  }

  Weight lambda() const { return parse_weight(weight); }

  // The weight length is the rank; type A also accepts --rank n for SL_n.
  RootDatum root_datum() const {
    int r = rank;
    if (!weight.empty()) {
      const int len = lambda().rank();
      if (r != 0 && r != len && !(type == "A" && r == len + 1))
        throw UsageError("--rank " + std::to_string(r) + " does not fit a weight of length " + std::to_string(len));
      r = len;
    }
    if (r <= 0) throw UsageError("--rank or --weight is required");
    return build_root_system(type[0], r);
  }
};

// A setup given by preset name or by explicit sequence, weights and order.
struct SetupArgs {
  std::string preset_name;
  std::string sequence;
  std::string psi;
  std::string order = "lex";

  void attach(CLI::App* app) {
    app->add_option("--preset", preset_name, "named setup")->check(CLI::IsMember(preset_names()));
    app->add_option("--sequence", sequence, "JSON list of root coordinate vectors");
    app->add_option("--psi", psi, "weight function coefficients, comma separated");
    app->add_option("--order", order, "lex, rlex, opp-lex or opp-rlex");
  }

  Setup setup(const GroupArgs& g) const {
    if (!preset_name.empty()) {
      if (!sequence.empty()) throw UsageError("give either --preset or --sequence");
      return preset(preset_name);
    }
    if (sequence.empty()) throw UsageError("give --preset or --sequence");
    auto rd = g.root_datum();
    json j;
    try {
      j = json::parse(sequence);
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    std::vector<Eigen::VectorXi> coords;
    for (const auto& r : j) {
      auto v = r.get<std::vector<int>>();
      coords.push_back(Eigen::Map<Eigen::VectorXi>(v.data(), static_cast<Eigen::Index>(v.size())));
    }
    auto seq = sequence_from_coords(rd, coords);
    WeightFunction w = psi.empty() ? WeightFunction::homogeneous(seq.size()) : WeightFunction(parse_list(psi));
    if (w.size() != seq.size()) throw UsageError("--psi needs one coefficient per root");
    Tiebreak t;
    try {
      t = parse_tiebreak(order);
    } catch (const ConfigurationError& e) {
      throw UsageError(e.what());
    }
    return Setup{rd, seq, MonomialOrder{w, t}};
  }
};

json setup_json(const Setup& s) {
  json seq = json::array();
  for (int k : s.sequence.roots) {
    const auto& r = s.rd.root(k);
    seq.push_back(std::vector<int>(r.data(), r.data() + r.size()));
  }
  return {{"type", describe(s.rd)},
          {"sequence", seq},
          {"psi", s.order.weight.coeffs},
          {"order", to_string(s.order.tiebreak)}};
}

json essential_json(const Setup& s, const EssentialSet& es) {
  json out = setup_json(s);
  out["lambda"] = weight_json(es.lambda);
  out["count"] = es.points.size();
  out["points"] = points_json(es.points.points);
  return out;
}

json word_list(const std::vector<WeylWord>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

json form_json(const QuadraticForm& f) {
  json terms = json::array();
  for (const auto& t : f.terms)
    terms.push_back({{"coeff", t.coeff},
                     {"monomial", "p" + to_string(t.a) + "p" + to_string(t.b)},
                     {"degree", t.degree},
                     {"exponent", t.exponent}});
  return {{"form", to_string(f)}, {"terms", terms}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Toric degenerations of flag varieties: polytopes, essential monoids and LS-paths"};
  app.require_subcommand(1);
  std::function<void()> action;

  GroupArgs g;
  SetupArgs s;
  std::string input = "-";
  int threads = 1;

  auto* roots = app.add_subcommand("roots", "positive roots and Cartan matrix");
  g.attach(roots, false);
  roots->callback([&] {
    action = [&] {
      auto rd = g.root_datum();
      json rs = json::array(), hs = json::array();
      for (int k = 0; k < rd.num_positive_roots(); ++k) {
        const auto& r = rd.root(k);
        rs.push_back(std::vector<int>(r.data(), r.data() + r.size()));
        hs.push_back(rd.height(k));
      }
      json cartan = json::array();
      for (int i = 0; i < rd.rank(); ++i) {
        json row = json::array();
        for (int j = 0; j < rd.rank(); ++j) row.push_back(rd.cartan()(i, j));
        cartan.push_back(row);
      }
      emit({{"type", describe(rd)}, {"cartan", cartan}, {"positive_roots", rs}, {"heights", hs}});
    };
  });

  auto* dim = app.add_subcommand("dim", "dimension of V(λ)");
  g.attach(dim);
  dim->callback([&] { action = [&] { emit({{"dim", integer_json(weyl_dim(g.root_datum(), g.lambda()))}}); }; });

  std::string word_text;
  auto* words = app.add_subcommand("words", "reduced expressions of a Weyl group element (default w₀)");
  g.attach(words, false);
  words->add_option("--word", word_text, "word in simple reflections, e.g. 121");
  words->callback([&] {
    action = [&] {
      auto rd = g.root_datum();
      WeylWord w = word_text.empty() ? rd.canonical_word(rd.longest_element()) : WeylWord::parse(word_text);
      auto all = reduced_words(rd, w);
      emit({{"word", to_string(w)},
            {"reduced", rd.is_reduced(w)},
            {"length", rd.length(rd.element(w))},
            {"count", all.size()},
            {"reduced_words", word_list(all)}});
    };
  });

  auto* poly = app.add_subcommand("polytope", "polytopes from the catalog");
  poly->require_subcommand(1);
  auto* gt = poly->add_subcommand("gt", "Gelfand–Tsetlin polytope");
  g.attach(gt);
  gt->callback([&] { action = [&] { emit(polytope_json(gt_polytope(g.root_datum().rank() + 1, g.lambda()))); }; });
  auto* fflv = poly->add_subcommand("fflv", "FFLV polytope");
  g.attach(fflv);
  fflv->callback([&] { action = [&] { emit(polytope_json(fflv_polytope(g.root_datum().rank() + 1, g.lambda()))); }; });
  auto* str = poly->add_subcommand("string", "string polytope of a reduced word of w₀");
  g.attach(str);
  str->add_option("--word", word_text, "reduced word of w₀")->required();
  str->callback([&] {
    action = [&] {
      auto rd = g.root_datum();
      if (g.type != "A") throw DomainError("string cones are available in type A");
      auto w = WeylWord::parse(word_text);
      emit(polytope_json(string_polytope(string_cone_sln(rd.rank() + 1, w), rd, w, g.lambda())));
    };
  });
  std::string which = "sp4";
  auto* sp4 = poly->add_subcommand("sp4", "the three rank-two symplectic polytopes");
  sp4->add_option("--weight", g.weight)->required();
  sp4->add_option("--which", which)->check(CLI::IsMember({"sp4", "q", "string"}));
  sp4->callback([&] {
    action = [&] {
      auto P = sp4_polytopes(g.lambda());
      emit(polytope_json(which == "sp4" ? P.sp4 : which == "q" ? P.q : P.string_1212));
    };
  });
  int simplex_dim = 0;
  std::string size_text = "1";
  auto* simplex = poly->add_subcommand("simplex", "closed simplex {x ≥ 0, Σ x ≤ a}");
  simplex->add_option("--dim", simplex_dim)->required()->check(CLI::PositiveNumber);
  simplex->add_option("--size", size_text, "a as p/q");
  simplex->callback([&] { action = [&] { emit(polytope_json(gromov_simplex(simplex_dim, parse_rational(size_text)))); }; });

  auto* points = app.add_subcommand("points", "lattice points of a polytope");
  points->add_option("input", input, "polytope JSON file, - for stdin");
  points->callback([&] {
    action = [&] {
      auto pts = lattice_points(polytope_of(read_json(input)));
      emit({{"count", pts.size()}, {"points", points_json(pts.points)}});
    };
  });

  int dilates = 3;
  auto* inv = app.add_subcommand("invariants", "face numbers, Ehrhart data and volume");
  inv->add_option("input", input, "polytope JSON file, - for stdin");
  inv->add_option("--dilates", dilates)->check(CLI::PositiveNumber);
  inv->callback([&] {
    action = [&] {
      auto P = polytope_of(read_json(input));
      auto I = polytope_invariants(P, dilates);
      json ehr = json::array();
      for (const auto& c : I.ehrhart) ehr.push_back(to_string(c));
      emit({{"affine_dim", I.affine_dim},
            {"vertices", I.vertex_count},
            {"facets", P.facets().size()},
            {"f_vector", I.f_vector},
            {"dilate_counts", I.dilate_counts},
            {"ehrhart", ehr},
            {"normalized_volume", to_string(I.normalized_volume)}});
    };
  });

  std::string first, second;
  auto* cmp = app.add_subcommand("compare", "unimodular equivalence of two lattice polytopes");
  cmp->add_option("first", first)->required();
  cmp->add_option("second", second)->required();
  cmp->callback([&] {
    action = [&] {
      auto r = unimodular_equivalent(polytope_of(read_json(first)), polytope_of(read_json(second)));
      json out = {{"verdict", to_string(r.verdict)}, {"reason", r.reason}};
      if (r.certificate) {
        json lin = json::array(), shift = json::array();
        for (Eigen::Index i = 0; i < r.certificate->linear.rows(); ++i) {
          json row = json::array();
          for (Eigen::Index j = 0; j < r.certificate->linear.cols(); ++j)
            row.push_back(integer_json(r.certificate->linear(i, j)));
          lin.push_back(row);
          shift.push_back(integer_json(r.certificate->shift[i]));
        }
        out["certificate"] = {{"linear", lin}, {"shift", shift}};
      }
      emit(out);
    };
  });

  auto* ess = app.add_subcommand("essential", "essential multi-exponents es(λ)");
  g.attach(ess);
  s.attach(ess);
  ess->callback([&] {
    action = [&] {
      auto setup = s.setup(g);
      emit(essential_json(setup, essential_set(setup.rd, g.lambda(), setup.sequence, setup.order)));
    };
  });

  auto* lus = app.add_subcommand("lusztig", "lattice points of the Lusztig polytope of a reduced word");
  g.attach(lus);
  lus->add_option("--word", word_text, "reduced word of w₀")->required();
  lus->callback([&] {
    action = [&] {
      auto rd = g.root_datum();
      auto w = WeylWord::parse(word_text);
      emit(essential_json(lusztig_setup(rd, w), lusztig_essential(rd, g.lambda(), w)));
    };
  });

  int levels = 2, generators = 1;
  bool global = false;
  auto* sat = app.add_subcommand("saturation", "generation and saturation evidence along the ray of λ");
  g.attach(sat);
  s.attach(sat);
  sat->add_option("--levels", levels, "highest level computed")->check(CLI::PositiveNumber);
  sat->add_option("--generators", generators, "levels used as generators")->check(CLI::PositiveNumber);
  sat->add_option("--threads", threads, "weights computed at a time")->check(CLI::PositiveNumber);
  sat->add_flag("--global", global, "cone over all weights of degree ≤ levels instead of one ray");
  sat->callback([&] {
    action = [&] {
      auto setup = s.setup(g);
      GradedMonoid gamma(setup);
      auto level_points = [](const std::vector<LevelPoint>& v) {
        json out = json::array();
        for (const auto& p : v) out.push_back({{"level", p.level}, {"point", p.point}});
        return out;
      };
      if (global) {
        std::vector<Weight> ws;
        Eigen::VectorXi c = Eigen::VectorXi::Zero(setup.rd.rank());
        auto walk = [&](auto& self, int i, int left) -> void {
          if (i == setup.rd.rank()) {
            ws.push_back(Weight(c));
            return;
          }
          for (int t = 0; t <= left; ++t) {
            c[i] = t;
            self(self, i + 1, left - t);
          }
          c[i] = 0;
        };
        walk(walk, 0, levels);
        for (const auto& w : ws) gamma.compute(w);
        auto r = global_saturation_check(gamma, ws);
        json missing = json::array();
        for (const auto& [w, m] : r.missing) missing.push_back({{"lambda", weight_json(w)}, {"point", m}});
        json out = setup_json(setup);
        out["weights"] = ws.size();
        out["facets"] = r.facets;
        out["saturated"] = r.saturated();
        out["missing"] = missing;
        emit(out);
        return;
      }
      auto lambda = g.lambda();
      gamma.compute_ray(lambda, levels, threads);
      auto r = saturation_check(gamma, lambda, generators, levels);
      json out = setup_json(setup);
      out["lambda"] = weight_json(lambda);
      out["levels"] = levels;
      out["generators_from"] = generators;
      out["generated"] = r.generated();
      out["saturated"] = r.saturated();
      out["not_generated"] = level_points(r.not_generated);
      out["not_saturated"] = level_points(r.not_saturated);
      emit(out);
    };
  });

  auto* lsp = app.add_subcommand("lspaths", "LS-paths of shape λ");
  g.attach(lsp);
  lsp->callback([&] {
    action = [&] {
      auto rd = g.root_datum();
      auto lambda = g.lambda();
      json paths = json::array();
      auto all = ls_paths(rd, lambda);
      for (const auto& p : all) {
        json dirs = json::array(), breaks = json::array();
        for (const auto& d : p.directions) dirs.push_back(to_string(coset_word(rd, lambda, d)));
        for (const auto& a : p.breaks) breaks.push_back(to_string(a));
        paths.push_back({{"dirs", dirs}, {"breaks", breaks}, {"end", weight_json(p.endpoint())}});
      }
      emit({{"count", all.size()}, {"paths", paths}});
    };
  });

  int d = 2, n = 4, degree = 2;
  bool chains = false;
  auto* std_ = app.add_subcommand("standard", "standard monomials on the Grassmannian Gr(d, n)");
  std_->add_option("-d", d)->check(CLI::PositiveNumber);
  std_->add_option("-n", n)->check(CLI::PositiveNumber);
  std_->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
  std_->add_flag("--chains", chains, "also list the maximal chains of I_{d,n}");
  std_->callback([&] {
    action = [&] {
      auto ms = standard_monomials(d, n, degree);
      json mono = json::array();
      for (const auto& m : ms) mono.push_back(to_string(m));
      json out = {{"d", d}, {"n", n}, {"degree", degree}, {"count", ms.size()}, {"monomials", mono}};
      if (chains) {
        json cs = json::array();
        for (const auto& c : maximal_chains(d, n)) {
          json chain = json::array();
          for (const auto& i : c) chain.push_back(to_string(i));
          cs.push_back(chain);
        }
        out["maximal_chains"] = cs;
      }
      emit(out);
    };
  });

  auto* gw = app.add_subcommand("gromov", "least nonzero coroot pairing of λ");
  g.attach(gw);
  gw->callback([&] { action = [&] { emit({{"width", to_string(gromov_width(g.root_datum(), g.lambda()))}}); }; });

  auto* fits = app.add_subcommand("fits", "whether the closed simplex of size k lies in a polytope");
  fits->add_option("input", input, "polytope JSON file, - for stdin");
  fits->add_option("--size", size_text, "k as p/q")->required();
  fits->callback([&] {
    action = [&] { emit({{"size", size_text}, {"fits", simplex_fits(polytope_of(read_json(input)), parse_rational(size_text))}}); };
  });

  std::string gr24 = "gr24-pbw";
  auto* init = app.add_subcommand("initform", "initial form of the Gr(2,4) Plücker relation");
  init->add_option("--preset", gr24)->check(CLI::IsMember({"gr24-pbw", "gr24-string", "gr24-lusztig", "gr24-qpbw"}));
  init->callback([&] {
    action = [&] {
      auto w = gr24_weighting(gr24);
      json dict = json::object();
      for (const auto& [i, e] : w.entries)
        dict["p" + to_string(i)] = {{"sign", e.sign}, {"exponent", e.exponent}, {"degree", w.degree(i)}};
      json out = {{"preset", gr24}, {"dictionary", dict}};
      out["initial_form"] = form_json(plucker_initial_form(w));
      emit(out);
    };
  });

  auto* bins = app.add_subcommand("binomials", "degree-two binomials among the points of es(λ)");
  g.attach(bins);
  s.attach(bins);
  bins->callback([&] {
    action = [&] {
      auto setup = s.setup(g);
      auto es = essential_set(setup.rd, g.lambda(), setup.sequence, setup.order);
      std::optional<PlueckerWeighting> names;
      if (setup.rd.type_label()[0] == 'A') try {
          names = plucker_weighting(setup, es);
        } catch (const DomainError&) {
        }
      json list = json::array();
      for (const auto& b : degree2_binomials(es)) {
        json item = {{"left", {b.left.first, b.left.second}}, {"right", {b.right.first, b.right.second}}, {"sum", b.sum}};
        if (names) item["pluecker"] = to_string(binomial_form(*names, es, b));
        list.push_back(item);
      }
      json out = essential_json(setup, es);
      out["binomials"] = list;
      emit(out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  action();
  return 0;
}

int fail(int code, const std::string& kind, const std::string& what) {
  std::cerr << json{{"error", kind}, {"message", what}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    return fail(2, "usage", e.what());
  } catch (const ConfigurationError& e) {
    return fail(2, "configuration", e.what());
  } catch (const ResourceError& e) {
    return fail(4, "resource", e.what());
  } catch (const DomainError& e) {
    return fail(3, "domain", e.what());
  } catch (const std::exception& e) {
    return fail(1, "internal", e.what());
  }
}
