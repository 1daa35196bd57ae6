#include "mfw/acceptance.hpp"
#include "mfw/bounds.hpp"
#include "mfw/castle.hpp"
#include "mfw/decompose.hpp"
#include "mfw/error.hpp"
#include "mfw/json_io.hpp"
#include "mfw/resolution.hpp"
#include "mfw/seifert.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mfw;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_file(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec);
}

LinkDiagram load_diagram(const std::string& arg, const std::string& format) {
  const bool is_file = looks_like_file(arg);
  std::string text = is_file ? read_file(arg) : arg;
  std::string fmt = format;
  if (fmt.empty()) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    bool json_ext = is_file && std::filesystem::path(arg).extension() == ".json";
    fmt = json_ext || (first != std::string::npos && text[first] == '{') ? "pd" : "braid";
  }
  if (fmt == "pd") return parse_pd(text);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return parse_braid(text);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void json(const Json& j) { stream() << j.dump(2) << "\n"; }

 private:
  std::ofstream file_;
};

Engine engine_from(const std::string& name) { return name == "oracle" ? Engine::Oracle : Engine::Coherent; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HOMFLY-PT polynomials, degree bounds and positive-diagram decompositions"};
  app.require_subcommand(1);
  std::string input, format, engine = "coherent", output, script_path, dot_path;
  unsigned seed = kDefaultSeed;
  bool assert_positive = false;
  int base_arc = -2;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "braid word such as \"3: 1 2 1\", PD JSON, or a file holding either")->required();
    sub->add_option("--format", format, "braid or pd; inferred when omitted")->check(CLI::IsMember({"braid", "pd"}));
    sub->add_option("-o,--output", output, "write JSON here instead of stdout");
  };

  CLI::App* homfly = app.add_subcommand("homfly", "HOMFLY-PT polynomial");
  add_input(homfly);
  homfly->add_option("--engine", engine, "coherent, oracle or both")->check(CLI::IsMember({"coherent", "oracle", "both"}));

  CLI::App* bounds = app.add_subcommand("bounds", "MFW inequalities and derived measures");
  add_input(bounds);
  bounds->add_option("--engine", engine, "coherent or oracle")->check(CLI::IsMember({"coherent", "oracle"}));
  bounds->add_flag("--assert-positive", assert_positive, "exit 1 unless the diagram is positive with U and L sharp");

  CLI::App* castle = app.add_subcommand("castle", "castle from a base point");
  add_input(castle);
  castle->add_option("--base", base_arc, "arc at whose tail the base point sits, -1 for a trivial circle; default: first appropriate point");
  castle->add_option("--dot", dot_path, "also write the floor graph in DOT format");

  CLI::App* decompose = app.add_subcommand("decompose", "decompose a positive diagram or certify it is not R-sharp");
  add_input(decompose);

  CLI::App* verify_cmd = app.add_subcommand("verify", "replay a move script and compare with a diagram");
  verify_cmd->add_option("script", script_path, "script JSON file, or a decompose certificate")->required();
  add_input(verify_cmd);

  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", seed, "seed for the randomised parts");
  selftest->add_option("-o,--output", output, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Output out(output);
    if (*homfly) {
      LinkDiagram d = load_diagram(input, format);
      if (engine == "both") {
        LaurentPoly2 a = homfly_coherent(d), b = homfly_oracle(d);
        Json j = poly_to_json(a);
        j["engine"] = "both";
        j["agree"] = a == b;
        j["text"] = a.to_string();
        out.json(j);
        return a == b ? kOk : kFalse;
      }
      LaurentPoly2 p = mfw::homfly(d, engine_from(engine));
      Json j = poly_to_json(p);
      j["engine"] = engine;
      j["text"] = p.to_string();
      out.json(j);
      return kOk;
    }
    if (*bounds) {
      LinkDiagram d = load_diagram(input, format);
      BoundsReport r = bounds_report(d, engine_from(engine));
      Json j = bounds_to_json(r);
      bool ok = r.all_hold();
      if (assert_positive) {
        bool positive = d.is_positive();
        bool sharp = positive && positive_equalities_check(r, d);
        j["positive_equalities"] = positive ? Json(sharp) : Json(nullptr);
        ok = ok && sharp;
      }
      out.json(j);
      return ok ? kOk : kFalse;
    }
    if (*castle) {
      LinkDiagram d = load_diagram(input, format);
      SeifertStructure s = seifert_structure(d);
      Point x = base_arc == -2 ? find_appropriate_point(d, s) : Point{base_arc};
      Castle c = build_castle(d, s, x);
      out.json(castle_to_json(d, s, c));
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw InputError("cannot write " + dot_path);
        dot << castle_to_dot(c);
      }
      return kOk;
    }
    if (*decompose) {
      SharpnessCertificate c = decompose_positive(load_diagram(input, format));
      out.json(certificate_to_json(c));
      return c.decomposable ? kOk : kFalse;
    }
    if (*verify_cmd) {
      MoveScript script;
      try {
        Json doc = Json::parse(read_file(script_path));
        // A decompose certificate carries its script.
        if (doc.is_object() && doc.contains("verdict")) {
          if (!doc["script"].is_object()) throw ParseError("certificate has no script");
          doc = doc["script"];
        }
        script = script_from_json(doc);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid script JSON: ") + e.what());
      }
      bool ok = verify(script, load_diagram(input, format));
      out.json(Json{{"verified", ok}});
      return ok ? kOk : kFalse;
    }
    if (*selftest) {
      Json results = Json::array();
      bool all = true;
      for (const CriterionResult& r : run_acceptance(seed)) {
        std::cerr << format_result(r) << "\n";
        results.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        all = all && r.passed;
      }
      out.json(Json{{"seed", seed}, {"passed", all}, {"criteria", results}});
      return all ? kOk : kFalse;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const LemmaViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFalse;
  }
  return kOk;
}
