#include "hopfelim/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <iomanip>
#include <iterator>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hopfelim/elimination.hpp"
#include "hopfelim/expr.hpp"
#include "hopfelim/free_lie.hpp"
#include "hopfelim/render.hpp"
#include "hopfelim/suites.hpp"

namespace hopfelim {

std::vector<std::string> parse_generator_list(const std::string& list_text, const std::string& prefix) {
  std::vector<std::string> out;
  if (!list_text.empty() && std::all_of(list_text.begin(), list_text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const int n = std::stoi(list_text);
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  } else {
    std::stringstream ss(list_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                 item.end());
      if (item.empty()) throw Error(ErrorKind::InvalidArgument, "empty generator symbol in '" + list_text + "'");
      if (!std::isalpha(static_cast<unsigned char>(item[0])) ||
          !std::all_of(item.begin(), item.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
        throw Error(ErrorKind::InvalidArgument, "generator symbol '" + item + "' is not an identifier");
      }
      out.push_back(item);
    }
    if (!list_text.empty() && list_text.back() == ',') throw Error(ErrorKind::InvalidArgument, "empty generator symbol in '" + list_text + "'");
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "generator list '" + list_text + "' is empty");
  return out;
}

namespace {

class Session {
 public:
  Session(const RunConfig& cfg, std::istream& in, std::ostream& out)
      : cfg_(cfg), in_(in), out_(out), alg_(cfg.v_generators, cfg.w_generators, cfg.max_degree) {}

  bool json() const { return cfg_.output_format == "json"; }

  int expand_cmd(const std::string& src) {
    const TensorElement t = read(src, Context::Lie);
    emit("expansion", to_json(t), to_text(t));
    return kExitOk;
  }

  int extract_cmd(const std::string& src) {
    const TensorElement t = read(src, Context::Tensor);
    const LiePolynomial x = lie_extract(t);
    emit("lie", to_json(x), to_text(x));
    return kExitOk;
  }

  int adjoint_cmd(const std::string& h_src, const std::string& c_src) {
    const TensorElement h = read(h_src, Context::Tensor);
    const TensorElement c = read(c_src, Context::Tensor);
    require_cap(h);
    require_cap(c);
    const TensorElement r = adjoint_action(h, c);
    emit("result", to_json(r), to_text(r));
    return kExitOk;
  }

  int normal_form_cmd(const std::string& src) {
    const TensorElement t = read(src, Context::Tensor);
    require_cap(t);
    const SmashElement p = smash_normal_form(alg_, t);
    emit("normal_form", to_json(alg_, p), to_text(alg_, p));
    return kExitOk;
  }

  int eliminate_cmd(const std::string& src) {
    const TensorElement t = read(src, Context::Lie);
    require_cap(t);
    const LiePolynomial x = lie_extract(t);
    const Elimination e = eliminate_lie(alg_, x);
    std::set<LetterId> used;
    for (const auto& [w, c] : e.x_u) used.insert(w.begin(), w.end());
    if (json()) {
      Json j;
      j["x_U"] = to_json(e.x_u);
      j["x_W"] = to_json(e.x_w);
      Json gens = Json::array();
      for (LetterId u : used) gens.push_back(generator_json(u));
      j["generators"] = std::move(gens);
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "x_U = " << to_text(e.x_u) << "\n";
      out_ << "x_W = " << to_text(e.x_w) << "\n";
      for (LetterId u : used) out_ << alg_.u_symbol(u) << " = " << to_text(alg_.u_expansion(u)) << "\n";
    }
    return kExitOk;
  }

  int gens_cmd() {
    const auto gens = free_generators(alg_, cfg_.max_degree);
    if (json()) {
      Json list = Json::array();
      for (const auto& g : gens) list.push_back(generator_json(g.id));
      Json j;
      j["generators"] = std::move(list);
      out_ << j.dump(2) << "\n";
    } else {
      for (const auto& g : gens) {
        out_ << alg_.u_symbol(g.id) << " (degree " << g.degree << ") = " << to_text(g.expansion) << "\n";
      }
    }
    return kExitOk;
  }

  int dims_cmd() {
    const auto rows = bigraded_dimension_audit(static_cast<int>(alg_.v_count()), static_cast<int>(alg_.w_count()),
                                               cfg_.max_degree);
    if (json()) {
      Json list = Json::array();
      for (const auto& r : rows) {
        Json row;
        row["degree"] = r.degree;
        row["lhs"] = r.lhs;
        row["rhs"] = r.rhs();
        row["f_w"] = r.f_w;
        row["f_u"] = r.f_u;
        list.push_back(std::move(row));
      }
      Json j;
      j["v_count"] = alg_.v_count();
      j["w_count"] = alg_.w_count();
      j["rows"] = std::move(list);
      out_ << j.dump(2) << "\n";
    } else {
      out_ << std::left << std::setw(8) << "degree" << std::setw(12) << "F(V+W)" << std::setw(12) << "F(W)+F(U)"
           << std::setw(10) << "F(W)" << "F(U)\n";
      for (const auto& r : rows) {
        out_ << std::setw(8) << r.degree << std::setw(12) << r.lhs << std::setw(12) << r.rhs() << std::setw(10)
             << r.f_w << r.f_u << "\n";
      }
    }
    for (const auto& r : rows) {
      if (r.lhs != r.rhs()) return kExitCheck;
    }
    return kExitOk;
  }

  int check_cmd() {
    SuiteConfig sc;
    sc.seed = cfg_.seed;
    sc.degree_cap = cfg_.max_degree;
    const auto results = run_all_suites(sc);
    const bool all = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed; });
    if (json()) {
      Json list = Json::array();
      for (const auto& r : results) {
        Json s;
        s["name"] = r.name;
        s["passed"] = r.passed;
        s["checks"] = r.checks;
        s["detail"] = r.detail;
        list.push_back(std::move(s));
      }
      Json j;
      j["seed"] = cfg_.seed;
      j["max"] = cfg_.max_degree;
      j["passed"] = all;
      j["suites"] = std::move(list);
      out_ << j.dump(2) << "\n";
    } else {
      for (const auto& r : results) {
        out_ << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks): " << r.detail << "\n";
      }
    }
    return all ? kExitOk : kExitCheck;
  }

  void report_residual(const NotALieElementError& e) {
    if (json()) {
      Json j;
      j["error"] = to_string(ErrorKind::NotALieElement);
      j["residual"] = to_json(e.residual());
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "not a Lie element; residual = " << to_text(e.residual()) << "\n";
    }
  }

 private:
  TensorElement read(const std::string& src, Context ctx) {
    std::string text = src;
    if (src == "-") text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    return evaluate(*parse_expression(text, alg_, ctx), alg_);
  }

  void require_cap(const TensorElement& t) const {
    if (t.max_degree() > cfg_.max_degree) {
      throw Error(ErrorKind::DegreeCapExceeded, "input degree " + std::to_string(t.max_degree()) + " exceeds --max " +
                                                    std::to_string(cfg_.max_degree));
    }
  }

  void emit(const char* key, Json j, const std::string& text) {
    if (json()) {
      Json o;
      o[key] = std::move(j);
      out_ << o.dump(2) << "\n";
    } else {
      out_ << text << "\n";
    }
  }

  Json generator_json(LetterId u) const {
    const auto [alpha, v] = alg_.u_definition(u);
    Json g;
    g["symbol"] = alg_.u_symbol(u);
    g["alpha"] = alg_.alphabet()->symbols(alpha);
    g["v"] = alg_.alphabet()->letter(v).symbol;
    g["degree"] = alg_.u_degree(u);
    g["expansion"] = to_json(alg_.u_expansion(u));
    return g;
  }

  const RunConfig& cfg_;
  std::istream& in_;
  std::ostream& out_;
  MixedAlgebra alg_;
};

}  // namespace

CommandResult run_command(const std::vector<std::string>& args, std::istream& in) {
  std::ostringstream out, err;
  CommandResult result;

  CLI::App app{"Exact free Lie algebra and Hopf algebra computations with Lazard elimination", "hopfelim"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string v_list = "v";
  std::string w_list = "s";
  std::string first_expr, second_expr;

  auto add = [&](const std::string& name, const std::string& description, std::size_t positional) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--v", v_list, "V generators: comma-separated symbols, or a count n for v1..vn")
        ->capture_default_str();
    sub->add_option("--w", w_list, "W generators: comma-separated symbols, or a count n for w1..wn")
        ->capture_default_str();
    sub->add_option("--max", cfg.max_degree, "Degree cap")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--format", cfg.output_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
    if (positional == 1) sub->add_option("expr", first_expr, "Expression, or - for stdin")->required();
    if (positional == 2) {
      sub->add_option("h_expr", first_expr, "Acting element, a polynomial in W, or - for stdin")->required();
      sub->add_option("c_expr", second_expr, "Element acted on, or - for stdin")->required();
    }
    return sub;
  };

  CLI::App* expand_sub = add("expand", "Expand a Lie expression into the tensor algebra", 1);
  CLI::App* extract_sub = add("extract", "Lyndon-basis coordinates of a tensor expression", 1);
  CLI::App* adjoint_sub = add("adjoint", "Adjoint action h . c with h a polynomial in W", 2);
  CLI::App* normal_sub = add("normal-form", "Smash-product coordinates (U-word, W-word) of an expression", 1);
  CLI::App* eliminate_sub = add("eliminate", "Split a Lie element as x_U + x_W", 1);
  CLI::App* gens_sub = add("gens", "List the free generators u = alpha . v up to --max", 0);
  CLI::App* dims_sub = add("dims", "Compare dim F(V+W) with dim F(W) + dim F(U) per degree", 0);
  CLI::App* check_sub = add("check", "Run the property suites", 0);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? kExitOk : kExitUser;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  std::unique_ptr<Session> session;
  try {
    cfg.v_generators = parse_generator_list(v_list, "v");
    cfg.w_generators = parse_generator_list(w_list, "w");
    session = std::make_unique<Session>(cfg, in, out);
    if (expand_sub->parsed()) result.exit_code = session->expand_cmd(first_expr);
    else if (extract_sub->parsed()) result.exit_code = session->extract_cmd(first_expr);
    else if (adjoint_sub->parsed()) result.exit_code = session->adjoint_cmd(first_expr, second_expr);
    else if (normal_sub->parsed()) result.exit_code = session->normal_form_cmd(first_expr);
    else if (eliminate_sub->parsed()) result.exit_code = session->eliminate_cmd(first_expr);
    else if (gens_sub->parsed()) result.exit_code = session->gens_cmd();
    else if (dims_sub->parsed()) result.exit_code = session->dims_cmd();
    else if (check_sub->parsed()) result.exit_code = session->check_cmd();
  } catch (const NotALieElementError& e) {
    session->report_residual(e);
    err << "error: " << e.what() << "\n";
    result.exit_code = kExitUser;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = e.kind() == ErrorKind::DecompositionFailure ? kExitInternal : kExitUser;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    result.exit_code = kExitInternal;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace hopfelim
