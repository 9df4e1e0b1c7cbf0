#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "freecert/cli.hpp"
#include "freecert/harness.hpp"
#include "freecert/serialize.hpp"

namespace py = pybind11;
using namespace freecert;

namespace {

Word word_of(const std::string& text, std::optional<int> rank) { return parse_word(text, rank); }

std::pair<Word, Word> pair_of(const std::string& a, const std::string& b, std::optional<int> rank) {
  const int r = rank.value_or(std::max({1, max_index_in(a), max_index_in(b)}));
  return {parse_word(a, r), parse_word(b, r)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Free group words, Whitehead graphs, axes and non-simplicity certificates";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<WindowExhausted>(m, "WindowExhausted", PyExc_RuntimeError);

  m.def("reduce", [](const std::string& w, std::optional<int> rank) {
    return to_string(word_of(w, rank));
  }, py::arg("word"), py::arg("rank") = py::none());

  m.def("cyclic_reduce", [](const std::string& w, std::optional<int> rank) {
    const CyclicReduction r = cyclic_reduce(word_of(w, rank));
    return std::make_pair(to_string(r.conjugator), to_string(r.core.word()));
  }, py::arg("word"), py::arg("rank") = py::none());

  m.def("whitehead_edges", [](const std::string& w, std::optional<int> rank) {
    return named_edges(build_whitehead_graph(word_of(w, rank)));
  }, py::arg("word"), py::arg("rank") = py::none());

  m.def("cut_vertices", [](const std::string& w, std::optional<int> rank) {
    std::vector<std::string> out;
    for (Letter l : cut_vertices(build_whitehead_graph(word_of(w, rank)))) out.push_back(vertex_name(l));
    return out;
  }, py::arg("word"), py::arg("rank") = py::none());

  m.def("is_simple", [](const std::string& w, std::optional<int> rank) {
    const Word word = word_of(w, rank);
    py::gil_scoped_release release;
    return is_simple(word);
  }, py::arg("word"), py::arg("rank") = py::none());

  m.def("minimize", [](const std::string& w, std::optional<int> rank) {
    return to_string(whitehead_minimize(cyclic_reduce(word_of(w, rank)).core).minimal.word());
  }, py::arg("word"), py::arg("rank") = py::none());

  m.def("axis_overlap_json", [](const std::string& g, const std::string& h, std::optional<int> rank) {
    const auto [a, b] = pair_of(g, h, rank);
    return to_json(overlap(a, b)).dump();
  }, py::arg("g"), py::arg("h"), py::arg("rank") = py::none());

  m.def("certify_json", [](const std::string& a, std::optional<std::string> pivot, std::optional<int> rank) {
    if (pivot) {
      const auto [subject, w] = pair_of(a, *pivot, rank);
      return to_json(certify_via_theorem(w, subject)).dump();
    }
    return to_json(certify_auto(word_of(a, rank))).dump();
  }, py::arg("word"), py::arg("pivot") = py::none(), py::arg("rank") = py::none());

  m.def("verify_paper_json", [](int rank, std::uint64_t seed) {
    PaperConfig config;
    config.rank = rank;
    config.seed = seed;
    py::gil_scoped_release release;
    return to_json(verify_paper(config)).dump();
  }, py::arg("rank") = 2, py::arg("seed") = 1);

  m.def("corpus_json", [](int rank, std::size_t length, std::optional<std::size_t> count,
                          std::uint64_t seed, unsigned jobs) {
    CorpusConfig config;
    config.rank = rank;
    config.length = length;
    config.count = count;
    config.seed = seed;
    config.jobs = jobs;
    py::gil_scoped_release release;
    return to_json(run_corpus(config)).dump();
  }, py::arg("rank"), py::arg("length"), py::arg("count") = 1000, py::arg("seed") = 1,
     py::arg("jobs") = 1);

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
