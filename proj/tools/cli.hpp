// Command-line front end. Kept in a header so tests can drive it in-process.
//
//   chartwo decompose --functor ext2|sym2|tensor --kind unipotent|nilpotent --n N [--m M]
//                     [--method formula|oracle|both] [--format text|json]
//   chartwo table [--max N] [--format text|json]
//   chartwo basis --n N [--functor tensor|sym2] [--verify] [--dump] [--format text|json]
//   chartwo expr "<expression>" [--method formula|oracle|both] [--format text|json]
//
// Exit codes: 0 ok, 1 usage or parse error, 2 verification mismatch,
// 3 oracle size cap exceeded. CHARTWO_ORACLE_CAP overrides the cap.
#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <chartwo/chartwo.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace chartwo::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kResourceCap = 3 };

using nlohmann::json;

inline json blocks_json(const JordanType& t) {
  json arr = json::array();
  for (const auto& b : t.blocks()) arr.push_back({{"size", b.size}, {"multiplicity", b.multiplicity}});
  return arr;
}

/// Inverse of blocks_json.
inline JordanType blocks_from_json(const json& arr) {
  JordanType t;
  for (const auto& b : arr) t.add(b.at("size").get<count_t>(), b.at("multiplicity").get<count_t>());
  return t;
}

struct Options {
  std::string format = "text";
  std::string method = "formula";
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err), cap_(oracle_cap_from_env()) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Jordan block decompositions of tensor, exterior and symmetric squares in characteristic two",
                 "chartwo"};
    app.require_subcommand(1);

    std::string functor, kind;
    count_t n = 0;
    std::optional<count_t> m;
    count_t max_n = 9;
    std::string basis_functor = "tensor";
    bool verify = false, dump = false;
    std::string expr_text;
    Options decompose_opts, table_opts, basis_opts, expr_opts;

    auto add_format = [](CLI::App* sub, Options& o) {
      sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_method = [](CLI::App* sub, Options& o) {
      sub->add_option("--method", o.method, "Computation route")->check(CLI::IsMember({"formula", "oracle", "both"}));
    };

    auto* dec = app.add_subcommand("decompose", "Decompose F(X_n) or X_m (x) X_n");
    dec->add_option("--functor", functor, "tensor, ext2 or sym2")->required()->check(CLI::IsMember({"tensor", "ext2", "sym2"}));
    dec->add_option("--kind", kind, "unipotent or nilpotent")->required()->check(CLI::IsMember({"unipotent", "nilpotent"}));
    dec->add_option("--n", n, "Block dimension")->required();
    dec->add_option("--m", m, "Second block dimension (tensor only)");
    add_method(dec, decompose_opts);
    add_format(dec, decompose_opts);

    auto* tab = app.add_subcommand("table", "Exterior and symmetric squares of V_n and W_n for n = 1..max");
    tab->add_option("--max", max_n, "Largest n");
    add_format(tab, table_opts);

    auto* bas = app.add_subcommand("basis", "Explicit Jordan basis on W_n (x) W_n or S^2(W_n)");
    bas->add_option("--n", n, "Block dimension")->required();
    bas->add_option("--functor", basis_functor, "tensor or sym2")->check(CLI::IsMember({"tensor", "sym2"}));
    bas->add_flag("--verify", verify, "Check the basis against the explicit action matrix");
    bas->add_flag("--dump", dump, "Print every chain");
    add_format(bas, basis_opts);

    auto* ex = app.add_subcommand("expr", "Decompose a module expression such as \"S2(W5 + 2*W3)\"");
    ex->add_option("expression", expr_text, "Expression")->required();
    add_method(ex, expr_opts);
    add_format(ex, expr_opts);

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      std::ostringstream o, er;
      const int code = app.exit(e, o, er);
      out_ << o.str();
      err_ << er.str();
      return code == 0 ? kOk : kUsage;
    }

    try {
      if (*dec) {
        if (m && functor != "tensor") throw std::invalid_argument("--m is only valid with --functor tensor");
        return decompose(parse_kind(kind), parse_functor(functor), n, m, decompose_opts);
      }
      if (*tab) return table(max_n, table_opts);
      if (*bas) return basis(n, basis_functor == "tensor" ? BasisSpace::tensor : BasisSpace::sym2, verify, dump, basis_opts);
      if (*ex) return expression(expr_text, expr_opts);
    } catch (const resource_limit_error& e) {
      err_ << "error: " << e.what() << '\n';
      return kResourceCap;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }
    return kUsage;
  }

 private:
  // Runs the formula and/or oracle routes and reports them.
  template <class Formula, class Oracle>
  int report(json input, const Options& o, std::optional<std::size_t> oracle_dim, Formula formula, Oracle oracle) {
    std::string method = o.method;
    if (method != "formula" && (!oracle_dim || *oracle_dim > cap_)) {
      if (method == "oracle")
        throw resource_limit_error("oracle dimension exceeds cap " + std::to_string(cap_));
      err_ << "warning: oracle dimension exceeds cap " << cap_ << "; using the formula only\n";
      method = "formula";
    }
    std::optional<JordanType> f, g;
    if (method != "oracle") f = formula();
    if (method != "formula") g = oracle();
    const JordanType& primary = f ? *f : *g;
    const bool match = !(f && g) || *f == *g;

    if (o.format == "json") {
      json j{{"input", std::move(input)},
             {"method", method},
             {"blocks", blocks_json(primary)},
             {"total_dim", primary.total_dim()},
             {"partition", format_jordan_type(primary)}};
      if (f && g) {
        j["oracle"] = {{"blocks", blocks_json(*g)}, {"total_dim", g->total_dim()}, {"partition", format_jordan_type(*g)}};
        j["match"] = match;
      }
      out_ << j.dump() << '\n';
    } else {
      if (f) out_ << format_jordan_type(*f) << '\n';
      if (g) out_ << format_jordan_type(*g) << '\n';
    }
    if (!match) {
      err_ << "mismatch: formula " << format_jordan_type(*f) << " vs oracle " << format_jordan_type(*g) << '\n';
      return kMismatch;
    }
    return kOk;
  }

  int decompose(OperatorKind kind, SquareFunctor functor, count_t n, std::optional<count_t> m, const Options& o) {
    if (n == 0 || (m && *m == 0)) throw std::invalid_argument("dimensions must be positive");
    json input{{"command", "decompose"}, {"functor", to_string(functor)}, {"kind", to_string(kind)}, {"n", n}};
    if (m) input["m"] = *m;
    const unsigned __int128 wide = n;
    unsigned __int128 d = 0;
    if (m)
      d = wide * *m;
    else if (functor == SquareFunctor::tensor)
      d = wide * wide;
    else
      d = functor == SquareFunctor::ext2 ? wide * (wide - 1) / 2 : wide * (wide + 1) / 2;
    std::optional<std::size_t> dim;
    if (d <= cap_) dim = static_cast<std::size_t>(d);
    if (m) {
      return report(input, o, dim, [&] { return tensor_decompose(*m, n); },
                    [&] { return oracle_tensor_jordan_type(kind, *m, n, cap_); });
    }
    return report(input, o, dim, [&] { return square_decompose(kind, functor, n); },
                  [&] { return oracle_jordan_type(kind, functor, n, cap_); });
  }

  int expression(const std::string& text, const Options& o) {
    const ModuleExpr e = parse_expr(text);
    json input{{"command", "expr"}, {"expression", e.to_string()}, {"kind", to_string(e.kind())}};
    return report(input, o, expr_dim(e, cap_), [&] { return decompose_expr(e); },
                  [&] { return oracle_expr_jordan_type(e, cap_); });
  }

  int table(count_t max_n, const Options& o) {
    if (max_n == 0) throw std::invalid_argument("--max must be positive");
    struct Row {
      count_t n;
      std::string cells[4];
    };
    std::vector<Row> rows;
    for (count_t n = 1; n <= max_n; ++n)
      rows.push_back({n,
                      {format_jordan_type(ext2_unipotent(n)), format_jordan_type(sym2_unipotent(n)),
                       format_jordan_type(ext2_nilpotent(n)), format_jordan_type(sym2_nilpotent(n))}});
    static const char* kHeads[4] = {"E2(V_n)", "S2(V_n)", "E2(W_n)", "S2(W_n)"};
    static const char* kKeys[4] = {"ext2_unipotent", "sym2_unipotent", "ext2_nilpotent", "sym2_nilpotent"};
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json row{{"n", r.n}};
        for (int c = 0; c < 4; ++c) row[kKeys[c]] = r.cells[c];
        arr.push_back(std::move(row));
      }
      out_ << json{{"input", {{"command", "table"}, {"max", max_n}}}, {"rows", std::move(arr)}}.dump() << '\n';
      return kOk;
    }
    std::size_t width[4];
    for (int c = 0; c < 4; ++c) {
      width[c] = std::string(kHeads[c]).size();
      for (const auto& r : rows) width[c] = std::max(width[c], r.cells[c].size());
    }
    const std::size_t nw = std::max<std::size_t>(1, std::to_string(max_n).size());
    width[3] = 0;  // no trailing padding
    out_ << std::left << std::setw(static_cast<int>(nw)) << "n";
    for (int c = 0; c < 4; ++c) out_ << " | " << std::setw(static_cast<int>(width[c])) << kHeads[c];
    out_ << '\n';
    for (const auto& r : rows) {
      out_ << std::setw(static_cast<int>(nw)) << r.n;
      for (int c = 0; c < 4; ++c) out_ << " | " << std::setw(static_cast<int>(width[c])) << r.cells[c];
      out_ << '\n';
    }
    out_ << std::right;
    return kOk;
  }

  int basis(count_t n, BasisSpace space, bool verify, bool dump, const Options& o) {
    if (n == 0) throw std::invalid_argument("--n must be positive");
    if (n > (1u << 16)) throw std::invalid_argument("--n too large for an explicit basis");
    const auto nn = static_cast<std::uint32_t>(n);
    const auto chains = space == BasisSpace::tensor ? build_tensor_basis(nn) : build_sym_basis(nn);
    const JordanType type = chain_type(chains);
    const char* name = space == BasisSpace::tensor ? "tensor" : "sym2";

    std::optional<BasisReport> rep;
    if (verify) {
      const SquareFunctor f = space == BasisSpace::tensor ? SquareFunctor::tensor : SquareFunctor::sym2;
      rep = verify_basis(chains, square_action(OperatorKind::nilpotent, f, nn, cap_), nn, space);
    }

    if (o.format == "json") {
      json j{{"input", {{"command", "basis"}, {"functor", name}, {"n", n}}},
             {"method", "basis"},
             {"blocks", blocks_json(type)},
             {"total_dim", type.total_dim()},
             {"partition", format_jordan_type(type)}};
      if (dump) {
        json arr = json::array();
        for (const auto& c : chains) {
          json vecs = json::array();
          for (const auto& v : c.vectors) vecs.push_back(format_vec(v));
          arr.push_back({{"s", c.s}, {"length", c.length()}, {"vectors", std::move(vecs)}});
        }
        j["chains"] = std::move(arr);
      }
      if (rep) j["verify"] = {{"pass", rep->ok()}, {"rank", rep->rank}, {"vectors", rep->vectors}, {"failures", rep->failures}};
      out_ << j.dump() << '\n';
    } else {
      out_ << format_jordan_type(type) << '\n';
      if (dump) out_ << dump_basis(chains);
      if (rep) {
        out_ << "verify: " << (rep->ok() ? "pass" : "FAIL") << " (" << rep->vectors << " vectors, rank " << rep->rank
             << ")\n";
        for (const auto& f : rep->failures) out_ << "  " << f << '\n';
      }
    }
    return rep && !rep->ok() ? kMismatch : kOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  std::size_t cap_;
};

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(argc, argv);
}

}  // namespace chartwo::cli
