#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "irrenum/errors.hpp"
#include "irrenum/lyndon_enum.hpp"
#include "irrenum/pipeline.hpp"
#include "irrenum/suffix_tree.hpp"

namespace py = pybind11;
using namespace irrenum;

namespace {

Word to_word(const std::vector<Symbol>& symbols, std::uint32_t q) {
  Word w(symbols);
  validate(w, Alphabet(q));
  return w;
}

std::vector<Symbol> from_word(const Word& w) { return {w.begin(), w.end()}; }

py::int_ to_pyint(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::dict record_dict(const EnumRecord& rec) {
  py::dict d;
  d["lyndon"] = from_word(rec.lyndon);
  if (rec.polynomial) {
    d["poly"] = std::vector<Coeff>(rec.polynomial->coeffs().begin(), rec.polynomial->coeffs().end());
  }
  if (rec.roots) {
    d["roots"] = *rec.roots;
    d["basis"] = to_string(rec.basis);
  }
  return d;
}

class PyLyndonIterator {
 public:
  PyLyndonIterator(std::size_t n, std::uint32_t q) : cursor_(n, q) {}

  std::vector<Symbol> next() {
    if (started_ && !cursor_.advance()) throw py::stop_iteration();
    started_ = true;
    return from_word(cursor_.word());
  }
  std::uint64_t updates() const { return cursor_.update_counter(); }

 private:
  LyndonEnumerator cursor_;
  bool started_ = false;
};

class PyIrreducibleIterator {
 public:
  explicit PyIrreducibleIterator(const EnumConfig& cfg) : stream_(cfg) {}

  py::dict next() {
    auto rec = stream_.next();
    if (!rec) throw py::stop_iteration();
    return record_dict(*rec);
  }

 private:
  IrreducibleEnumerator stream_;
};

EnumConfig make_config(std::uint32_t p, std::size_t n, const std::string& mode, std::optional<std::uint64_t> limit,
                       std::uint64_t seed, const std::string& basis, std::optional<std::vector<Coeff>> modulus,
                       std::optional<std::vector<Coeff>> alpha) {
  EnumConfig cfg;
  cfg.p = p;
  cfg.n = n;
  cfg.mode = parse_output_mode(mode);
  cfg.limit = limit;
  cfg.seed = seed;
  cfg.root_basis = parse_root_basis(basis);
  if (modulus) cfg.modulus = Poly(*modulus);
  if (alpha) cfg.alpha = Poly(*alpha);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_irrenum, m) {
  m.doc() = "Lyndon words and irreducible polynomials over prime fields";

  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DegreeCollapse>(m, "DegreeCollapse", PyExc_ArithmeticError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<SearchFailed>(m, "SearchFailed", PyExc_RuntimeError);

  m.def("count_lyndon", [](std::size_t n, std::uint32_t q) { return to_pyint(count_lyndon(n, q)); }, py::arg("n"),
        py::arg("q"), "Number of Lyndon words of length n over q symbols.");

  m.def(
      "is_lyndon",
      [](const std::vector<Symbol>& w, std::uint32_t q) {
        const Word word = to_word(w, q);
        return is_lyndon_suffix_tree(word, word.size(), q);
      },
      py::arg("word"), py::arg("q"), "Lyndon membership through the suffix tree of w w $.");

  m.def(
      "is_lyndon_naive", [](const std::vector<Symbol>& w) { return is_lyndon_naive(Word(w)); }, py::arg("word"),
      "Reference O(n^2) rotation test.");

  m.def(
      "duval_next",
      [](const std::vector<Symbol>& w, std::size_t n, std::uint32_t q) -> std::optional<std::vector<Symbol>> {
        auto next = duval_next(to_word(w, q), n, q);
        if (!next) return std::nullopt;
        return from_word(*next);
      },
      py::arg("word"), py::arg("n"), py::arg("q"), "Duval successor N(w); None once exhausted.");

  m.def(
      "next_lyndon",
      [](const std::vector<Symbol>& w, std::uint32_t q) -> std::optional<std::vector<Symbol>> {
        auto cursor = LyndonEnumerator::from_word(to_word(w, q), q);
        if (!cursor.advance()) return std::nullopt;
        return from_word(cursor.word());
      },
      py::arg("word"), py::arg("q"), "Next Lyndon word of the same length; None after the last one.");

  m.def(
      "compress",
      [](const std::vector<Symbol>& w, std::uint32_t q) {
        auto c = compress(to_word(w, q), q);
        std::vector<std::vector<Symbol>> blocks;
        for (const auto& b : c.blocks()) blocks.push_back(from_word(b));
        return py::make_tuple(blocks, c.runs());
      },
      py::arg("word"), py::arg("q"), "Blocks and runs of the symbol q-1.");

  m.def(
      "decompress",
      [](const std::vector<std::vector<Symbol>>& blocks, const std::vector<std::uint32_t>& runs, std::uint32_t q) {
        std::vector<Word> words;
        for (const auto& b : blocks) words.emplace_back(b);
        return from_word(decompress(CompressedWord::from_blocks(q, words, runs)));
      },
      py::arg("blocks"), py::arg("runs"), py::arg("q"));

  py::class_<PyLyndonIterator>(m, "LyndonWords", "Lyndon words of length n in increasing order.")
      .def(py::init<std::size_t, std::uint32_t>(), py::arg("n"), py::arg("q"))
      .def("__iter__", [](PyLyndonIterator& self) -> PyLyndonIterator& { return self; })
      .def("__next__", &PyLyndonIterator::next)
      .def_property_readonly("updates", &PyLyndonIterator::updates, "Cell updates so far.");

  m.def(
      "is_irreducible",
      [](const std::vector<Coeff>& coeffs, std::uint32_t p) {
        PrimeField F(p);
        for (Coeff c : coeffs) {
          if (c >= p) throw ValidationError("coefficient outside F_p");
        }
        return is_irreducible(Poly(coeffs), F);
      },
      py::arg("coeffs"), py::arg("p"), "Rabin irreducibility test; coefficients in ascending degree.");

  py::class_<PyIrreducibleIterator>(m, "IrreduciblePolynomials",
                                    "Stream of records, one per Lyndon word of length n.")
      .def(py::init([](std::uint32_t p, std::size_t n, const std::string& mode, std::optional<std::uint64_t> limit,
                       std::uint64_t seed, const std::string& basis, std::optional<std::vector<Coeff>> modulus,
                       std::optional<std::vector<Coeff>> alpha) {
             return std::make_unique<PyIrreducibleIterator>(
                 make_config(p, n, mode, limit, seed, basis, std::move(modulus), std::move(alpha)));
           }),
           py::arg("p"), py::arg("n"), py::arg("mode") = "polynomials", py::arg("limit") = py::none(),
           py::arg("seed") = 0, py::arg("basis") = "normal", py::arg("modulus") = py::none(),
           py::arg("alpha") = py::none())
      .def("__iter__", [](PyIrreducibleIterator& self) -> PyIrreducibleIterator& { return self; })
      .def("__next__", &PyIrreducibleIterator::next);

  m.def(
      "verify",
      [](std::uint32_t p, std::size_t n, std::uint64_t seed) {
        EnumConfig cfg;
        cfg.p = p;
        cfg.n = n;
        cfg.seed = seed;
        cfg.mode = OutputMode::PolynomialsAndRoots;
        auto ctx = preprocess(cfg);
        auto report = verify_stream(run(cfg), ctx, true);
        return py::make_tuple(report.ok, report.summary());
      },
      py::arg("p"), py::arg("n"), py::arg("seed") = 0, "Enumerate everything and self-check; (ok, summary).");
}
