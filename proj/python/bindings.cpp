#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jxextract/bench.hpp"
#include "jxextract/cli.hpp"
#include "jxextract/error.hpp"
#include "jxextract/parser.hpp"
#include "jxextract/printer.hpp"
#include "jxextract/refactor.hpp"
#include "jxextract/report.hpp"
#include "jxextract/resolve.hpp"
#include "jxextract/scoring.hpp"

namespace py = pybind11;
using namespace jxextract;

namespace {

SourceUnit load(const std::string& source) { return resolve_types(parse(source)); }

std::string oracle_json(const OracleEntry& o) {
  return oracle_to_json({o})[0].dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Extract Method recommendations for JX sources";
  m.attr("__version__") = JXEXTRACT_VERSION;

  // Base first so the subclasses can derive from it.
  static py::exception<Error> base(m, "JxError");
  static py::exception<SourceError> source_error(m, "ParseError", base.ptr());
  static py::exception<ResolveError> resolve_error(m, "ResolveError", base.ptr());
  static py::exception<RangeError> range_error(m, "RangeError", base.ptr());
  static py::exception<PreconditionError> precondition(m, "PreconditionError", base.ptr());
  static py::exception<NameClashError> name_clash(m, "NameClashError", base.ptr());
  static py::exception<InlineError> inline_error(m, "InlineError", base.ptr());
  static py::exception<CorpusError> corpus_error(m, "CorpusError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SourceError& e) {
      py::set_error(source_error, e.what());
    } catch (const ResolveError& e) {
      py::set_error(resolve_error, e.what());
    } catch (const RangeError& e) {
      py::set_error(range_error, e.what());
    } catch (const PreconditionError& e) {
      std::string msg = e.what();
      for (const auto& c : e.codes()) msg += (&c == &e.codes().front() ? " [" : ", ") + c;
      if (!e.codes().empty()) msg += "]";
      py::set_error(precondition, msg.c_str());
    } catch (const NameClashError& e) {
      py::set_error(name_clash, e.what());
    } catch (const InlineError& e) {
      py::set_error(inline_error, e.what());
    } catch (const CorpusError& e) {
      py::set_error(corpus_error, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("pretty_print", [](const std::string& source) { return pretty_print(load(source)); },
        py::arg("source"), "Parse, resolve and re-print a unit.");

  m.def(
      "recommend",
      [](const std::string& source, const std::string& path, int min_statements, int max_recs,
         double min_score, bool explain) {
        GenerationConfig gen{min_statements};
        RankingConfig ranking{max_recs, min_score};
        auto doc = build_report({{path, load(source)}}, gen, ranking);
        return to_json(doc, explain).dump();
      },
      py::arg("source"), py::arg("path") = "<input>", py::arg("min_statements") = 3,
      py::arg("max_recs") = 3, py::arg("min_score") = 0.0, py::arg("explain") = false,
      "Recommendation report as a JSON string.");

  m.def(
      "extract",
      [](const std::string& source, const std::string& method, int block, int start, int end,
         const std::string& name, int min_statements) {
        SourceUnit unit = load(source);
        auto [cls, meth] = find_method(unit, method);
        auto analysis = analyze_method(unit, cls, meth);
        auto cand = make_candidate(analysis, block, start, end);
        return pretty_print(extract(unit, cand, name, ExtractOptions{{min_statements}, 0}));
      },
      py::arg("source"), py::arg("method"), py::arg("block"), py::arg("start"), py::arg("end"),
      py::arg("name"), py::arg("min_statements") = 3,
      "Extract statements start..end of a block into a new method; returns the new source.");

  m.def(
      "inline_method",
      [](const std::string& source, const std::string& class_name, const std::string& callee,
         const std::string& file) {
        auto r = inline_method(load(source), class_name, callee, file);
        return py::make_tuple(pretty_print(r.unit), oracle_json(r.oracle));
      },
      py::arg("source"), py::arg("class_name"), py::arg("callee"), py::arg("file") = "",
      "Inline a method; returns (source, oracle entry as JSON).");

  m.def(
      "mutate",
      [](const std::string& source, std::uint64_t seed, double probability, int min_statements,
         const std::string& file) {
        auto r = mutate(load(source), seed, GenerationConfig{min_statements}, probability, file);
        return py::make_tuple(pretty_print(r.unit), oracle_to_json(r.oracles).dump());
      },
      py::arg("source"), py::arg("seed"), py::arg("probability") = 0.5,
      py::arg("min_statements") = 3, py::arg("file") = "",
      "Seeded random inlining; returns (source, oracle entries as JSON).");

  m.def(
      "label",
      [](const std::string& source, const std::string& method) {
        SourceUnit unit = load(source);
        auto [cls, meth] = find_method(unit, method);
        return label_listing(*unit.find_class(cls)->find_method(meth));
      },
      py::arg("source"), py::arg("method"), "The method with SX.Y statement labels.");

  m.def(
      "kulczynski",
      [](const std::set<std::string>& a, const std::set<std::string>& b) {
        return kulczynski_dist(a, b);
      },
      py::arg("a"), py::arg("b"), "Kulczynski distance between two string sets.");

  m.def(
      "evaluate",
      [](const std::string& corpus_dir, const std::string& oracle_path, int k,
         int min_statements, double min_score) {
        BenchConfig cfg;
        cfg.k = k;
        cfg.gen.min_extracted_statements = min_statements;
        cfg.min_score = min_score;
        return to_json(evaluate(corpus_dir, read_oracle(oracle_path), cfg)).dump();
      },
      py::arg("corpus_dir"), py::arg("oracle_path"), py::arg("k") = 1,
      py::arg("min_statements") = 3, py::arg("min_score") = 0.0,
      "Benchmark report as a JSON string.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (code, stdout, stderr).");
}
