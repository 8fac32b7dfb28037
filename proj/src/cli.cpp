#include "freehopf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "freehopf/checks.hpp"
#include "freehopf/errors.hpp"
#include "freehopf/freealg.hpp"
#include "freehopf/json_io.hpp"
#include "freehopf/rep.hpp"
#include "freehopf/series.hpp"
#include "freehopf/sweedler.hpp"
#include "freehopf/text.hpp"

namespace freehopf::cli {

namespace {

using json_io::Json;

constexpr std::size_t kInlineLimit = 1024;
constexpr std::size_t kMaxCheckLength = 7;

struct Options {
  std::string alphabet;
  std::string format = "text";
  std::vector<std::string> operands;
  std::string series;
  std::string rep;
  std::string psi;
  std::string hankel;
  std::size_t maxlen = 0;
  std::size_t explore = 0;
};

class Context {
 public:
  explicit Context(const Options& opts) : opts_(opts) {
    if (!opts_.alphabet.empty()) alphabet_ = Alphabet::parse(opts_.alphabet);
  }

  bool json() const { return opts_.format == "json"; }

  // Operands containing '.' are file paths ('.' is never a letter and never
  // appears in the text grammar); everything else is inline text.
  static std::string resolve(const std::string& operand) {
    if (operand.find('.') != std::string::npos) {
      std::ifstream in(operand, std::ios::binary);
      if (!in) throw ParseError("cannot read operand file '" + operand + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }
    if (operand.size() >= kInlineLimit)
      throw ParseError("inline operand of " + std::to_string(operand.size()) +
                       " bytes; pass operands of 1024 bytes or more as a file path");
    return operand;
  }

  const Alphabet& alphabet() const {
    if (!alphabet_) throw ParseError("--alphabet is required for text operands");
    return *alphabet_;
  }

  // JSON operands carry their own alphabet; it must agree with --alphabet.
  void adopt(const Alphabet& a) {
    if (alphabet_)
      require_same_alphabet(*alphabet_, a, "operand");
    else
      alphabet_ = a;
  }

  NCPoly poly(const std::string& operand) { return parse_poly(alphabet(), resolve(operand)); }

  Series series(const std::string& operand) {
    std::string text = resolve(operand);
    if (looks_like_json(text)) {
      LinRep r = json_io::linrep_from_json(json_io::parse(text));
      adopt(r.alphabet());
      return Series(std::move(r));
    }
    return Series(parse_poly(alphabet(), text));
  }

  MatRep matrep(const std::string& operand) {
    MatRep r = json_io::matrep_from_json(json_io::parse(resolve(operand)));
    adopt(r.alphabet());
    return r;
  }

 private:
  static bool looks_like_json(const std::string& text) {
    auto it = std::find_if(text.begin(), text.end(),
                           [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
    return it != text.end() && *it == '{';
  }

  const Options& opts_;
  std::optional<Alphabet> alphabet_;
};

std::string matrix_text(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

std::string emit(const Context& ctx, const NCPoly& p) {
  return (ctx.json() ? json_io::dump(json_io::to_json(p)) : to_string(p)) + "\n";
}
std::string emit(const Context& ctx, const Tensor2& t) {
  return (ctx.json() ? json_io::dump(json_io::to_json(t)) : to_string(t)) + "\n";
}
std::string emit(const Context& ctx, const Rational& q) {
  return (ctx.json() ? Json(q.get_str()).dump() : q.get_str()) + "\n";
}
std::string emit(const Context& ctx, const Matrix& m) {
  return ctx.json() ? json_io::dump(json_io::to_json(m)) + "\n" : matrix_text(m);
}
std::string emit(const Context&, const LinRep& r) { return json_io::dump(json_io::to_json(r)) + "\n"; }
std::string emit(const Context&, const MatRep& r) { return json_io::dump(json_io::to_json(r)) + "\n"; }
std::string emit(const Context& ctx, const Series& f) {
  return f.finite_support() ? emit(ctx, f.support()) : emit(ctx, f.rep());
}

std::pair<std::size_t, std::size_t> window(const std::string& spec) {
  auto comma = spec.find(',');
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("--hankel expects p,s with nonnegative integers, got '" + spec + "'");
    return std::stoul(s);
  };
  if (comma == std::string::npos)
    throw ParseError("--hankel expects p,s, got '" + spec + "'");
  return {number(spec.substr(0, comma)), number(spec.substr(comma + 1))};
}

std::vector<Rational> coordinates(const std::string& spec) {
  std::vector<Rational> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
               item.end());
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw ParseError("--psi expects comma-separated rationals");
  return out;
}

// Returns the report text; a failing report becomes a CheckFailure.
struct CheckFailure {
  std::string message;
};

std::string report_text(const CheckReport& r) {
  if (!r.passed())
    throw CheckFailure{r.name + ": counterexample " + *r.counterexample + " (" +
                       std::to_string(r.cases) + " cases)"};
  return r.name + ": " + std::to_string(r.cases) + " cases passed\n";
}

using Handler = std::function<std::string(Context&, const Options&)>;

std::map<std::string, Handler> handlers() {
  std::map<std::string, Handler> h;
  h["coprod"] = [](Context& c, const Options& o) { return emit(c, coproduct(c.poly(o.operands.at(0)))); };
  h["mul"] = [](Context& c, const Options& o) {
    return emit(c, poly_mul(c.poly(o.operands.at(0)), c.poly(o.operands.at(1))));
  };
  h["counit"] = [](Context& c, const Options& o) { return emit(c, counit(c.poly(o.operands.at(0)))); };
  h["antipode"] = [](Context& c, const Options& o) { return emit(c, antipode(c.poly(o.operands.at(0)))); };
  h["pair"] = [](Context& c, const Options& o) {
    Series f = c.series(o.series);
    return emit(c, pair(f, c.poly(o.operands.at(0))));
  };
  h["conv"] = [](Context& c, const Options& o) {
    Series f = c.series(o.operands.at(0));
    Series g = c.series(o.operands.at(1));
    return emit(c, convolve(f, g));
  };
  h["tensor"] = [](Context& c, const Options& o) {
    MatRep a = c.matrep(o.operands.at(0));
    MatRep b = c.matrep(o.operands.at(1));
    return emit(c, tensor_rep(a, b));
  };
  h["dsum"] = [](Context& c, const Options& o) {
    MatRep a = c.matrep(o.operands.at(0));
    MatRep b = c.matrep(o.operands.at(1));
    return emit(c, direct_sum(a, b));
  };
  h["eval"] = [](Context& c, const Options& o) {
    MatRep r = c.matrep(o.rep);
    return emit(c, eval_rep(r, c.poly(o.operands.at(0))));
  };
  h["hankel"] = [](Context& c, const Options& o) {
    auto [p, s] = window(o.hankel);
    return emit(c, hankel(c.series(o.series), p, s).entries);
  };
  h["rank"] = [](Context& c, const Options& o) {
    auto [p, s] = window(o.hankel);
    return std::to_string(hankel_rank(c.series(o.series), p, s)) + "\n";
  };
  h["learn"] = [](Context& c, const Options& o) { return emit(c, learn(c.series(o.series), o.explore)); };
  h["split"] = [](Context& c, const Options& o) {
    Series f = c.series(o.series);
    Json parts = Json::array();
    for (const auto& [g, k] : split(as_linrep(f))) {
      Json item = Json::object();
      item["g"] = json_io::to_json(g.rep());
      item["h"] = json_io::to_json(k.rep());
      parts.push_back(std::move(item));
    }
    return json_io::dump(parts) + "\n";
  };
  h["dualS"] = [](Context& c, const Options& o) -> std::string {
    if (!o.rep.empty()) {
      MatRep r = c.matrep(o.rep);
      if (o.psi.empty()) throw ParseError("dualS --rep requires --psi");
      DualVector acted = dual_action(r, c.poly(o.operands.at(0)), DualVector(coordinates(o.psi)));
      return emit(c, acted.as_row());
    }
    return emit(c, transpose_antipode(as_linrep(c.series(o.series))));
  };
  auto check = [](std::function<CheckReport(const Alphabet&, std::size_t)> fn) {
    return [fn](Context& c, const Options& o) {
      if (o.maxlen > kMaxCheckLength)
        throw ParseError("--maxlen must be at most " + std::to_string(kMaxCheckLength));
      return report_text(fn(c.alphabet(), o.maxlen));
    };
  };
  h["check-coassoc"] = check(check_coassoc);
  h["check-antipode"] = check(check_antipode);
  h["check-dual-assoc"] = check(check_dual_assoc);
  h["check-conv-oracle"] = check(check_conv_oracle);
  return h;
}

struct Arity {
  std::size_t operands;
  bool series, rep, hankel, explore, maxlen, psi;
};

const std::map<std::string, std::pair<std::string, Arity>>& subcommands() {
  static const std::map<std::string, std::pair<std::string, Arity>> table{
      {"coprod", {"coproduct of a polynomial", {1, false, false, false, false, false, false}}},
      {"mul", {"product of two polynomials", {2, false, false, false, false, false, false}}},
      {"counit", {"counit of a polynomial", {1, false, false, false, false, false, false}}},
      {"antipode", {"antipode of a polynomial (primitive letters only)", {1, false, false, false, false, false, false}}},
      {"pair", {"pair a series with a polynomial", {1, true, false, false, false, false, false}}},
      {"conv", {"convolution of two series", {2, false, false, false, false, false, false}}},
      {"tensor", {"tensor product of two representations", {2, false, false, false, false, false, false}}},
      {"dsum", {"direct sum of two representations", {2, false, false, false, false, false, false}}},
      {"eval", {"evaluate a representation on a polynomial", {1, false, true, false, false, false, false}}},
      {"hankel", {"Hankel window of a series", {0, true, false, true, false, false, false}}},
      {"rank", {"rank of a Hankel window", {0, true, false, true, false, false, false}}},
      {"learn", {"minimal linear representation from Hankel data", {0, true, false, false, true, false, false}}},
      {"split", {"coproduct of a recognizable series as (g_i, h_i) pairs", {0, true, false, false, false, false, false}}},
      {"dualS", {"transposed antipode of a series, or dual action with --rep/--psi", {0, true, true, false, false, false, true}}},
      {"check-coassoc", {"exhaustive coassociativity check", {0, false, false, false, false, true, false}}},
      {"check-antipode", {"exhaustive antipode check", {0, false, false, false, false, true, false}}},
      {"check-dual-assoc", {"exhaustive convolution associativity check", {0, false, false, false, false, true, false}}},
      {"check-conv-oracle", {"conv_rep against the convolution formula", {0, false, false, false, false, true, false}}},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact computations in the free bialgebra k<Sigma> and its Sweedler dual", "freehopf"};
  app.require_subcommand(1, 1);

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : subcommands()) {
    const auto& [help, arity] = entry;
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--alphabet", opts.alphabet, "alphabet declaration, e.g. a:L,b:L,g:G");
    sub->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"text", "json"}));
    if (arity.operands > 0) {
      auto* opt = sub->add_option("operands", opts.operands, "inline operands or file paths");
      if (arity.psi)
        opt->expected(0, 1);
      else
        opt->expected(static_cast<int>(arity.operands))->required();
    } else if (arity.psi) {
      sub->add_option("operands", opts.operands, "polynomial g for the dual action")->expected(0, 1);
    }
    if (arity.series) {
      auto* opt = sub->add_option("--series", opts.series, "series: polynomial text or LinRep JSON");
      if (!arity.psi) opt->required();
    }
    if (arity.rep) {
      auto* opt = sub->add_option("--rep", opts.rep, "MatRep JSON");
      if (!arity.psi) opt->required();
    }
    if (arity.psi) sub->add_option("--psi", opts.psi, "dual vector, comma-separated rationals");
    if (arity.hankel) sub->add_option("--hankel", opts.hankel, "window p,s")->required();
    if (arity.explore) sub->add_option("--explore", opts.explore, "exploration length L")->required();
    if (arity.maxlen) sub->add_option("--maxlen", opts.maxlen, "maximum word length")->required();
    subs.emplace(name, sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  std::string selected;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) selected = name;
  if (opts.operands.size() == 0 && selected == "dualS" && opts.series.empty() && opts.rep.empty()) {
    err << "error: dualS needs --series, or --rep with --psi and a polynomial\n";
    return kParseError;
  }
  if (selected == "dualS" && !opts.rep.empty() && opts.operands.empty()) {
    err << "error: dualS --rep needs a polynomial operand\n";
    return kParseError;
  }

  try {
    Context ctx(opts);
    std::string result = handlers().at(selected)(ctx, opts);
    out << result;
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.message << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace freehopf::cli
