// Command-line front end: enumeration, determinants, chart transport and the
// verification sweeps. Exit codes: 0 ok, 2 verification failure, 3 bad input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jetsections/io.hpp"
#include "jetsections/parallel.hpp"

using namespace jetsections;

namespace {

constexpr int kExitVerification = 2;
constexpr int kExitInvalid = 3;

struct Config {
  std::string format = "table";
  std::string output;
  int n = 1;
  int d = 1;
  int k = -1;
  int p = 0;
  int chart = 1;
  int from = 0;
  int twist = -1;
  int max_entry = 3;
  int trials = 20;
  std::uint64_t seed = 1;
  std::string mode = "degree";
  std::string kind = "delta0";
  std::string tuple;
  std::string poly;
  std::string input;
  bool show_matrix = false;
  bool signs = false;
};

// Output sink: stdout or --output file.
class Out {
 public:
  explicit Out(const Config& c) {
    if (!c.output.empty()) {
      file_.open(c.output);
      if (!file_) throw InvalidArgument("cannot open output file " + c.output);
    }
  }
  std::ostream& operator()() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

bool json_format(const Config& c) {
  if (c.format != "json" && c.format != "table") {
    throw InvalidArgument("--format must be json or table");
  }
  return c.format == "json";
}

std::string read_input(const Config& c) {
  if (!c.poly.empty()) return c.poly;
  if (c.input.empty()) throw InvalidArgument("give a polynomial with --poly or --input");
  std::ifstream in(c.input);
  if (!in) throw InvalidArgument("cannot read " + c.input);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<int> optional_n(const CLI::App& sub) {
  if (sub.count("--N") == 0) return std::nullopt;
  return sub.get_option("--N")->as<int>();
}

int cmd_enumerate(const Config& c) {
  std::vector<TupleBNPlus> ts;
  if (c.mode == "weight") {
    ts = enumerate_weight(c.n, c.p);
  } else if (c.mode == "degree") {
    ts = enumerate_degree(c.n, c.d);
  } else {
    throw InvalidArgument("--mode must be weight or degree");
  }
  Out out(c);
  if (json_format(c)) {
    Json arr = Json::array();
    for (const auto& t : ts) arr.push_back(to_json(t));
    out() << arr.dump() << "\n";
  } else {
    for (const auto& t : ts) out() << t.to_string() << "\n";
    out() << "count " << ts.size() << "\n";
  }
  return 0;
}

int cmd_det(const Config& c) {
  const TupleBNPlus t = parse_tuple(c.tuple);
  std::optional<JetMatrix> m;
  if (c.kind == "delta0") {
    m = build_delta0(t);
  } else if (c.kind == "H") {
    m = build_H(t);
  } else if (c.kind == "delta_j") {
    m = build_delta_j(t, c.chart);
  } else {
    throw InvalidArgument("--kind must be delta0, H or delta_j");
  }
  const Polynomial det = determinant(*m);
  Out out(c);
  if (json_format(c)) {
    Json j;
    j["tuple"] = to_json(t);
    j["kind"] = c.kind;
    if (c.kind == "delta_j") j["chart"] = c.chart;
    if (c.show_matrix) j["matrix"] = to_json(*m);
    j["det"] = to_json(det);
    out() << j.dump() << "\n";
  } else {
    if (c.show_matrix) out() << render_matrix(*m);
    out() << det.to_string() << "\n";
  }
  return 0;
}

int cmd_chart(const Config& c, const CLI::App& sub) {
  const Polynomial p = parse_polynomial(read_input(c), optional_n(sub), c.from);
  if (p.space().kind() != SpaceKind::Affine) {
    throw InvalidArgument("chart: expected an affine polynomial (x[..] variables)");
  }
  const RationalSection s = change_chart(p, c.chart);
  std::vector<int> poles;
  if (p.space().chart() == 0) poles = global_section_report(p, 0).poles;
  std::optional<Polynomial> transported;
  if (c.twist >= 0) transported = twisted_transport(p, c.chart, c.twist);

  Out out(c);
  if (json_format(c)) {
    Json j;
    j["input"] = to_json(p);
    j["section"] = to_json(s);
    if (!poles.empty()) j["poles"] = poles;
    if (transported) {
      j["twist"] = c.twist;
      j["transported"] = to_json(*transported);
    }
    out() << j.dump() << "\n";
  } else if (transported) {
    out() << transported->to_string() << "\n";
  } else {
    out() << "(" << s.numerator().to_string() << ") / "
          << render_var(s.denominator(), s.space()) << "^" << s.pole() << "\n";
    if (!poles.empty()) {
      out() << "poles";
      for (int x : poles) out() << " " << x;
      out() << "\n";
    }
  }
  return 0;
}

struct SweepRecord {
  TupleBNPlus tuple;
  std::vector<int> signs;
  std::vector<std::string> failures;
};

int cmd_verify(const Config& c) {
  if (c.max_entry < 0) throw InvalidArgument("--M must be >= 0");
  const auto ts = enumerate_degree(c.n, c.max_entry + 1);
  const auto records = parallel_map(ts.size(), [&](std::size_t i) {
    SweepRecord r{ts[i], {}, {}};
    const TupleBNPlus& t = ts[i];
    auto guard = [&](const char* what, auto&& check) {
      try {
        check();
      } catch (const Error& e) {
        r.failures.push_back(std::string(what) + ": " + e.what());
      }
    };
    for (int j = 0; j <= c.n; ++j) {
      guard("main3", [&] { r.signs.push_back(verify_main3(t, j)); });
    }
    guard("minth", [&] {
      const auto [mono, coeff] = minth_check(build_delta0(t));
      const auto [sm, sc] = smallest_monomial(det_delta0(t));
      if (!(mono == sm) || coeff != sc) throw VerificationError("diagonal is not the smallest term");
    });
    guard("smallest-term", [&] {
      const RationalTerm b = smallest_rational_term(t, SmallestTermMode::Brute);
      const RationalTerm f = smallest_rational_term(t, SmallestTermMode::ClosedForm);
      if (!(b == f)) throw VerificationError("closed form disagrees with expansion");
    });
    guard("poles", [&] {
      const auto poles = global_section_report(det_delta0(t), t.max_entry() + 1);
      if (!poles.global) throw VerificationError("pole above M + 1");
      if (poles.poles.front() != t.max_entry() + 1 && !t.all_empty()) {
        throw VerificationError("chart-1 pole is not M + 1");
      }
    });
    return r;
  });
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.failures.empty() ? 0 : 1;

  Out out(c);
  if (json_format(c)) {
    Json j;
    j["N"] = c.n;
    j["M"] = c.max_entry;
    j["checked"] = records.size();
    Json failures = Json::array();
    for (const auto& r : records) {
      for (const auto& f : r.failures) failures.push_back({{"tuple", to_json(r.tuple)}, {"error", f}});
    }
    j["failures"] = std::move(failures);
    if (c.signs) {
      Json signs = Json::array();
      for (const auto& r : records) signs.push_back({{"tuple", to_json(r.tuple)}, {"signs", r.signs}});
      j["signs"] = std::move(signs);
    }
    j["status"] = failed == 0 ? "OK" : "FAIL";
    out() << j.dump() << "\n";
  } else {
    if (c.signs) {
      for (const auto& r : records) {
        out() << r.tuple.to_string();
        for (int s : r.signs) out() << (s > 0 ? " +" : " -");
        out() << "\n";
      }
    }
    for (const auto& r : records) {
      for (const auto& f : r.failures) out() << r.tuple.to_string() << " " << f << "\n";
    }
    out() << "checked " << records.size() << " tuples, " << failed << " failed\n";
    out() << (failed == 0 ? "OK" : "FAIL") << "\n";
  }
  return failed == 0 ? 0 : kExitVerification;
}

int effective_k(const Config& c) { return c.k < 0 ? c.d - 1 : c.k; }

int cmd_dim(const Config& c) {
  const H0Basis b = h0_basis(c.n, c.d, effective_k(c));
  std::size_t expected = 1;
  for (int i = 0; i < c.d; ++i) expected *= static_cast<std::size_t>(c.n + 1);
  const bool ok = b.elements.size() == expected;
  Out out(c);
  if (json_format(c)) {
    Json j;
    j["count"] = b.elements.size();
    j["expected"] = expected;
    j["status"] = ok ? "OK" : "FAIL";
    out() << j.dump() << "\n";
  } else {
    out() << b.elements.size() << "\n" << (ok ? "OK" : "FAIL") << "\n";
  }
  return ok ? 0 : kExitVerification;
}

int cmd_h0_basis(const Config& c) {
  const H0Basis b = h0_basis(c.n, c.d, effective_k(c));
  Out out(c);
  if (json_format(c)) {
    Json arr = Json::array();
    for (const auto& e : b.elements) {
      Json j;
      j["tuple"] = to_json(e.tuple);
      j["det"] = to_json(e.det);
      j["poles"] = e.poles;
      j["smallest_term"] = to_json(e.smallest);
      arr.push_back(std::move(j));
    }
    out() << arr.dump() << "\n";
  } else {
    for (const auto& e : b.elements) {
      out() << e.tuple.to_string() << "  poles";
      for (int x : e.poles) out() << " " << x;
      out() << "  smallest " << e.smallest.coeff.to_string() << "*"
            << render_monomial(e.smallest.numerator, e.smallest.space) << "/"
            << render_var({1, 0}, e.smallest.space) << "^" << e.smallest.pole << "\n";
    }
    out() << "count " << b.elements.size() << "\n";
  }
  return 0;
}

int cmd_basis_expand(const Config& c, const CLI::App& sub) {
  const Polynomial p = parse_polynomial(read_input(c), optional_n(sub), 0);
  const auto coeffs = expand_in_det_basis(p);
  const bool exact = p.space().kind() == SpaceKind::Affine &&
                     reconstruct(coeffs, p.space().dimension()) == p;
  Out out(c);
  if (json_format(c)) {
    Json arr = Json::array();
    for (const auto& [t, x] : coeffs) arr.push_back({{"tuple", to_json(t)}, {"coeff", x.to_string()}});
    Json j;
    j["coefficients"] = std::move(arr);
    j["reconstructed"] = exact;
    out() << j.dump() << "\n";
  } else {
    for (const auto& [t, x] : coeffs) out() << x.to_string() << "  " << t.to_string() << "\n";
    out() << (exact ? "reconstructed" : "MISMATCH") << "\n";
  }
  return exact ? 0 : kExitVerification;
}

int cmd_diffhom(const Config& c, const CLI::App& sub) {
  const Polynomial p = parse_polynomial(read_input(c), optional_n(sub), 0);
  const int d = sub.count("--d") ? c.d : p.homogeneous_degree();
  const bool ok = diff_homogeneous_check(p, d, c.trials, c.seed);
  Out out(c);
  if (json_format(c)) {
    Json j;
    j["result"] = ok;
    j["d"] = d;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    out() << j.dump() << "\n";
  } else {
    out() << (ok ? "homogeneous" : "not homogeneous") << " (d=" << d << ", trials=" << c.trials
          << ", seed=" << c.seed << ")\n";
  }
  return ok ? 0 : kExitVerification;
}

void report(const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = message;
  j["kind"] = kind;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinant bases of twisted jet-bundle sections over projective space"};
  app.require_subcommand(1);
  Config c;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", c.format, "json or table")->capture_default_str();
    s->add_option("-o,--output", c.output, "write to a file instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list staircase tuples");
  enumerate->add_option("--N", c.n)->required();
  enumerate->add_option("--mode", c.mode, "weight or degree")->capture_default_str();
  enumerate->add_option("--p", c.p, "weight (weight mode)");
  enumerate->add_option("--d", c.d, "degree (degree mode)");
  add_format(enumerate);

  auto* det = app.add_subcommand("det", "build a determinant matrix and expand it");
  det->add_option("--tuple", c.tuple, "JSON array of arrays, block 1 first")->required();
  det->add_option("--kind", c.kind, "delta0, H or delta_j")->capture_default_str();
  det->add_option("--chart", c.chart, "chart for delta_j");
  det->add_flag("--show-matrix", c.show_matrix);
  add_format(det);

  auto* chart = app.add_subcommand("chart", "move a section to another chart");
  chart->add_option("--poly", c.poly, "polynomial (text or JSON)");
  chart->add_option("--input", c.input, "file holding the polynomial");
  chart->add_option("--N", c.n);
  chart->add_option("--from", c.from, "chart of the input")->capture_default_str();
  chart->add_option("--chart", c.chart, "target chart")->capture_default_str();
  chart->add_option("--twist", c.twist, "twist d: print den^d times the image");
  add_format(chart);

  auto* verify = app.add_subcommand("verify", "main3, minimal diagonal and smallest-term sweep");
  verify->add_option("--N", c.n)->required();
  verify->add_option("--M", c.max_entry, "largest entry")->capture_default_str();
  verify->add_flag("--signs", c.signs, "list the main3 signs");
  add_format(verify);

  auto* dim = app.add_subcommand("dim", "build and verify the basis, print its size");
  auto* h0 = app.add_subcommand("h0-basis", "build and verify the basis, print its elements");
  for (auto* s : {dim, h0}) {
    s->add_option("--N", c.n)->required();
    s->add_option("--d", c.d)->required();
    s->add_option("--k", c.k, "jet order, default d - 1");
    add_format(s);
  }

  auto* expand = app.add_subcommand("basis-expand", "coefficients in the determinant basis");
  expand->add_option("--poly", c.poly);
  expand->add_option("--input", c.input);
  expand->add_option("--N", c.n);
  add_format(expand);

  auto* diffhom = app.add_subcommand("diffhom", "differential homogeneity test");
  diffhom->add_option("--poly", c.poly, "homogeneous polynomial in X[..]");
  diffhom->add_option("--input", c.input);
  diffhom->add_option("--N", c.n);
  diffhom->add_option("--d", c.d, "degree, default the polynomial's");
  diffhom->add_option("--trials", c.trials)->capture_default_str();
  diffhom->add_option("--seed", c.seed)->capture_default_str();
  add_format(diffhom);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("invalid_input", e.what());
    return kExitInvalid;
  }

  try {
    if (*enumerate) return cmd_enumerate(c);
    if (*det) return cmd_det(c);
    if (*chart) return cmd_chart(c, *chart);
    if (*verify) return cmd_verify(c);
    if (*dim) return cmd_dim(c);
    if (*h0) return cmd_h0_basis(c);
    if (*expand) return cmd_basis_expand(c, *expand);
    if (*diffhom) return cmd_diffhom(c, *diffhom);
  } catch (const InvalidArgument& e) {
    report("invalid_input", e.what());
    return kExitInvalid;
  } catch (const VerificationError& e) {
    report("verification_failure", e.what());
    return kExitVerification;
  } catch (const Error& e) {
    report("error", e.what());
    return kExitVerification;
  }
  return 0;
}
