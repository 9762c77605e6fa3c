// Command-line front end: JSON in, JSON (or text) out, deterministic bytes.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bkm/json_io.hpp"

namespace fs = std::filesystem;
using bkm::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;
constexpr int kExitParse = 4;

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw bkm::ParseError(std::string("in ") + path + ": " + e.what());
  }
}

struct Options {
  int height = 10;
  std::string chi = "sign";
  std::string format = "json";
  std::string out;
};

bkm::CharacterHom resolve_chi(const bkm::BorcherdsCartanMatrix& A,
                              const std::string& spec) {
  if (spec == "sign") return bkm::make_chi_sign(A);
  if (spec == "trivial") return bkm::make_chi_trivial(A);
  if (spec.size() > 1 && spec[0] == '@') {
    Json j = load_json(spec.substr(1));
    if (!j.is_object() || !j.contains("values"))
      throw bkm::ParseError("chi file must contain a \"values\" array");
    const Json& vals = j["values"];
    if (static_cast<int>(vals.size()) != A.rank())
      throw bkm::ParseError("chi values must have one entry per simple root");
    std::map<int, int> eps;
    std::map<int, bkm::Rational> imval;
    for (int i = 0; i < A.rank(); ++i) {
      bkm::Rational v = bkm::rational_from_json(vals[i]);
      if (A.is_real(i))
        eps[i] = static_cast<int>(bkm::to_integer(v));
      else
        imval[i] = v;
    }
    return bkm::make_chi_custom(A, std::move(eps), std::move(imval));
  }
  throw bkm::ParseError("chi must be sign, trivial, or @file.json");
}

std::string render_series_text(const bkm::TruncatedSeries& f) {
  std::ostringstream os;
  if (f.terms().empty()) {
    os << "0\n";
    return os.str();
  }
  for (const auto& [m, c] : f.terms()) {
    os << bkm::format_rational(c);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) os << " X" << i << "^" << m[i];
    os << "\n";
  }
  return os.str();
}

void emit(const Options& opt, const Json& report,
          const std::string& text_rendering = "") {
  std::string payload;
  if (opt.format == "text" && !text_rendering.empty())
    payload = text_rendering;
  else
    payload = report.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw IoError("cannot write " + opt.out);
    out << payload;
  }
}

// Resolves a path mentioned inside an input file relative to that file.
std::string sibling_path(const std::string& input_path, const std::string& ref) {
  fs::path p(ref);
  if (p.is_absolute()) return ref;
  fs::path base = fs::path(input_path).parent_path();
  return (base / p).string();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact characters and tensor-product decisions for "
               "Borcherds-Kac-Moody algebras"};
  app.require_subcommand(1);
  Options opt;

  std::string algebra_path, weights_path, input_path;

  auto add_common = [&](CLI::App* cmd, bool with_chi = false) {
    cmd->add_option("--height,-H", opt.height, "truncation height")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", opt.out, "output path (default stdout)");
    if (with_chi)
      cmd->add_option("--chi", opt.chi, "sign|trivial|@file.json");
  };

  auto* validate = app.add_subcommand("validate", "validate an algebra file");
  validate->add_option("algebra", algebra_path)->required();
  add_common(validate);

  auto* components = app.add_subcommand(
      "components", "Pi(lambda), its components, and weight predicates");
  components->add_option("algebra", algebra_path)->required();
  components->add_option("weights", weights_path)->required();
  add_common(components);

  auto* numerator_cmd =
      app.add_subcommand("numerator", "normalized Weyl numerator U(lambda, chi)");
  numerator_cmd->add_option("algebra", algebra_path)->required();
  numerator_cmd->add_option("weight", weights_path)->required();
  add_common(numerator_cmd, true);

  auto* character =
      app.add_subcommand("character", "normalized character of L(lambda)");
  character->add_option("algebra", algebra_path)->required();
  character->add_option("weight", weights_path)->required();
  add_common(character);

  auto* tensor = app.add_subcommand("tensor-char",
                                    "product of normalized characters");
  tensor->add_option("algebra", algebra_path)->required();
  tensor->add_option("weights", weights_path)->required();
  add_common(tensor);

  auto* decide = app.add_subcommand(
      "decide", "tensor-product isomorphism decision (combinatorial)");
  decide->add_option("input", input_path)->required();
  add_common(decide);

  auto* oracle = app.add_subcommand(
      "oracle-check", "independent truncated-character comparison");
  oracle->add_option("input", input_path)->required();
  add_common(oracle);

  auto* graphc = app.add_subcommand("graph-c",
                                    "partition invariant c(G) of a simple graph");
  graphc->add_option("graph", input_path)->required();
  add_common(graphc);

  auto* logcheck = app.add_subcommand(
      "log-check", "log-coefficient law over all C inside Pi(lambda)");
  logcheck->add_option("algebra", algebra_path)->required();
  logcheck->add_option("weight", weights_path)->required();
  add_common(logcheck, true);

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    Json j = load_json(algebra_path);
    auto A = bkm::algebra_from_json(j);
    Json report;
    report["ok"] = true;
    report["n"] = A.rank();
    report["real_idx"] = A.real_indices();
    report["im_idx"] = A.imaginary_indices();
    Json d = Json::array();
    for (int i = 0; i < A.rank(); ++i) d.push_back(bkm::rational_to_json(A.d(i)));
    report["symmetrizer"] = std::move(d);
    emit(opt, report);
    return kExitOk;
  }

  if (components->parsed()) {
    auto A = bkm::algebra_from_json(load_json(algebra_path));
    auto weights = bkm::weights_from_json(load_json(weights_path), A.rank());
    Json out = Json::array();
    for (const auto& lam : weights) {
      Json e;
      e["weight"] = bkm::weight_to_json(lam);
      e["pi_lambda"] = bkm::pi_lambda(A, lam);
      Json comps = Json::array();
      for (const auto& C : bkm::mc_lambda(A, lam))
        comps.push_back(bkm::component_key_to_json(bkm::make_component_key(A, lam, C)));
      e["components"] = std::move(comps);
      e["special"] = bkm::is_special(A, lam);
      e["one_dimensional"] = bkm::is_one_dimensional(A, lam);
      out.push_back(std::move(e));
    }
    emit(opt, out);
    return kExitOk;
  }

  if (numerator_cmd->parsed()) {
    auto A = bkm::algebra_from_json(load_json(algebra_path));
    auto lam = bkm::weight_from_json(load_json(weights_path), A.rank());
    auto chi = resolve_chi(A, opt.chi);
    auto U = bkm::numerator(A, lam, chi, opt.height);
    emit(opt, bkm::series_to_json(U), render_series_text(U));
    return kExitOk;
  }

  if (character->parsed()) {
    auto A = bkm::algebra_from_json(load_json(algebra_path));
    auto lam = bkm::weight_from_json(load_json(weights_path), A.rank());
    auto ch = bkm::normalized_character(A, lam, opt.height);
    emit(opt, bkm::series_to_json(ch), render_series_text(ch));
    return kExitOk;
  }

  if (tensor->parsed()) {
    auto A = bkm::algebra_from_json(load_json(algebra_path));
    auto weights = bkm::weights_from_json(load_json(weights_path), A.rank());
    auto ch = bkm::tensor_character(A, weights, opt.height);
    emit(opt, bkm::series_to_json(ch), render_series_text(ch));
    return kExitOk;
  }

  if (decide->parsed() || oracle->parsed()) {
    Json j = load_json(input_path);
    if (!j.is_object() || !j.contains("algebra") || !j.contains("left") ||
        !j.contains("right"))
      throw bkm::ParseError("input must contain \"algebra\", \"left\", \"right\"");
    Json aj = j["algebra"].is_string()
                  ? load_json(sibling_path(input_path, j["algebra"].get<std::string>()))
                  : j["algebra"];
    auto A = bkm::algebra_from_json(aj);
    auto left = bkm::weights_from_json(j["left"], A.rank());
    auto right = bkm::weights_from_json(j["right"], A.rank());
    if (decide->parsed()) {
      auto v = bkm::decide_tensor_isomorphism(A, left, right);
      emit(opt, bkm::verdict_to_json(v));
    } else {
      int H = j.contains("H") ? j["H"].get<int>() : opt.height;
      auto r = bkm::oracle_equal_characters(A, left, right, H);
      Json report = bkm::oracle_to_json(r);
      report["H"] = H;
      emit(opt, report);
    }
    return kExitOk;
  }

  if (graphc->parsed()) {
    auto g = bkm::graph_from_json(load_json(input_path));
    Json report;
    report["c"] = bkm::c_of_graph(g);
    report["c_k"] = bkm::k_partition_counts(g);
    report["connected"] = bkm::is_connected(g);
    emit(opt, report);
    return kExitOk;
  }

  if (logcheck->parsed()) {
    auto A = bkm::algebra_from_json(load_json(algebra_path));
    auto lam = bkm::weight_from_json(load_json(weights_path), A.rank());
    auto chi = resolve_chi(A, opt.chi);
    auto pi = bkm::pi_lambda(A, lam);
    Json out = Json::array();
    bool all_match = true;
    const size_t k = pi.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      std::vector<int> C;
      for (size_t p = 0; p < k; ++p)
        if (mask & (size_t{1} << p)) C.push_back(pi[p]);
      int deg = bkm::total_degree(bkm::x_lambda_c(A, lam, C));
      auto [computed, predicted] =
          bkm::log_coefficient_check(A, lam, chi, C, std::max(opt.height, deg + 2));
      Json e;
      e["C"] = C;
      e["computed"] = bkm::rational_to_json(computed);
      e["predicted"] = bkm::rational_to_json(predicted);
      e["match"] = computed == predicted;
      all_match = all_match && computed == predicted;
      out.push_back(std::move(e));
    }
    Json report;
    report["all_match"] = all_match;
    report["checks"] = std::move(out);
    emit(opt, report);
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

namespace {

int fail_domain(const char* type, const std::exception& e) {
  Json report;
  report["ok"] = false;
  report["error"] = Json{{"type", type}, {"message", e.what()}};
  std::cout << report.dump(2) << "\n";
  return kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const bkm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const bkm::DominanceError& e) {
    return fail_domain("DominanceError", e);
  } catch (const bkm::AxiomError& e) {
    return fail_domain("AxiomError", e);
  } catch (const bkm::SymmetrizabilityError& e) {
    return fail_domain("SymmetrizabilityError", e);
  } catch (const bkm::BraidConsistencyError& e) {
    return fail_domain("BraidConsistencyError", e);
  } catch (const bkm::ZeroValueError& e) {
    return fail_domain("ZeroValueError", e);
  } catch (const bkm::NonUnitEpsError& e) {
    return fail_domain("NonUnitEpsError", e);
  } catch (const std::exception& e) {
    return fail_domain("Error", e);
  }
}
