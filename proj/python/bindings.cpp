// Python bindings. Pauli strings cross the boundary as text ("IXYZ..."), syndromes
// as lists of 0/1 and distributions as [I, X, Y, Z] lists.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qturbo/channel.hpp"
#include "qturbo/encoder.hpp"
#include "qturbo/errors.hpp"
#include "qturbo/montecarlo.hpp"
#include "qturbo/siso.hpp"
#include "qturbo/spectrum.hpp"
#include "qturbo/state_graph.hpp"
#include "qturbo/turbo.hpp"

namespace py = pybind11;
using namespace qturbo;

namespace {

std::vector<int> to_list(const BitVector& v) {
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v.get(i);
  }
  return out;
}

BitVector from_list(const std::vector<int>& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    v.set(i, bits[i] != 0);
  }
  return v;
}

MessageMode parse_mode(const std::string& name) {
  if (name == "posterior") {
    return MessageMode::Posterior;
  }
  if (name == "extrinsic") {
    return MessageMode::Extrinsic;
  }
  throw ValidationError("messages must be 'posterior' or 'extrinsic'");
}

py::dict report_dict(const TrialReport& r) {
  py::dict d;
  d["p"] = r.p;
  d["K"] = r.K;
  d["trials"] = r.trials;
  d["word_errors"] = r.word_errors;
  d["qubit_errors"] = r.qubit_errors;
  d["decode_failures"] = r.decode_failures;
  d["wer"] = r.wer;
  d["qer"] = r.qer;
  d["ci_low"] = r.ci_low;
  d["ci_high"] = r.ci_high;
  d["iterations_mean"] = r.iterations_mean();
  d["iterations_histogram"] = r.iterations_histogram;
  return d;
}

}  // namespace

PYBIND11_MODULE(qturbo, mod) {
  mod.doc() = "Quantum serial turbo codes: convolutional encoders, SISO and turbo decoding";

  py::register_exception<BudgetError>(mod, "BudgetError", PyExc_RuntimeError);
  py::register_exception<DecodeFailure>(mod, "DecodeFailure", PyExc_RuntimeError);
  // DimensionError and ValidationError derive from std::invalid_argument -> ValueError.

  py::class_<SeedTransformation>(mod, "Seed")
      .def_static(
          "from_rows",
          [](std::size_t n, std::size_t k, std::size_t m, const std::vector<std::uint64_t>& rows,
             const std::string& layout) {
            return seed_from_rows(n, k, m, rows, parse_layout(layout));
          },
          py::arg("n"), py::arg("k"), py::arg("m"), py::arg("rows"),
          py::arg("layout") = "memory-last")
      .def_static("load", &load_seed_file, py::arg("path"))
      .def_static("loads", &load_seed, py::arg("text"))
      .def_property_readonly("n", &SeedTransformation::n)
      .def_property_readonly("k", &SeedTransformation::k)
      .def_property_readonly("m", &SeedTransformation::m)
      .def(
          "rows",
          [](const SeedTransformation& s, const std::string& layout) {
            return seed_to_rows(s, parse_layout(layout));
          },
          py::arg("layout") = "memory-last")
      .def(
          "dumps",
          [](const SeedTransformation& s, const std::string& layout) {
            return store_seed(s, parse_layout(layout));
          },
          py::arg("layout") = "memory-last")
      .def(py::self == py::self);

  py::class_<StateDiagram>(mod, "StateDiagram")
      .def(py::init<const SeedTransformation&>(), py::arg("seed"))
      .def_property_readonly("num_vertices", &StateDiagram::num_vertices)
      .def_property_readonly("out_degree", &StateDiagram::out_degree)
      .def("is_non_catastrophic", [](const StateDiagram& d) { return is_non_catastrophic(d); })
      .def("is_completely_non_catastrophic",
           [](const StateDiagram& d) { return is_completely_non_catastrophic(d); })
      .def("is_recursive", [](const StateDiagram& d) { return is_recursive(d); })
      .def(
          "to_dot",
          [](const StateDiagram& d, bool zero_only) { return to_dot(d, zero_only); },
          py::arg("zero_weight_only") = false);

  py::class_<DistanceSpectrum>(mod, "DistanceSpectrum")
      .def_readonly("w_max", &DistanceSpectrum::w_max)
      .def_readonly("F", &DistanceSpectrum::F)
      .def_readonly("F1", &DistanceSpectrum::F1)
      .def_property_readonly("d_free", &DistanceSpectrum::d_free)
      .def_property_readonly("d1", &DistanceSpectrum::d1)
      .def("to_csv", &DistanceSpectrum::to_csv);

  mod.def(
      "compute_spectrum",
      [](const SeedTransformation& s, std::size_t w_max) { return compute_spectrum(s, w_max); },
      py::arg("seed"), py::arg("w_max"));
  mod.def("turbo_dmin_bound", &turbo_dmin_bound, py::arg("outer"), py::arg("inner"));
  mod.def("hashing_rate", &hashing_rate, py::arg("p"));
  mod.def("hashing_threshold", &hashing_threshold, py::arg("rate"));
  mod.def(
      "depolarizing_priors",
      [](double p, std::size_t n) { return PauliChannel::depolarizing(p).priors(n); },
      py::arg("p"), py::arg("num_qubits"));

  py::class_<ConvEncoder>(mod, "ConvEncoder")
      .def(py::init<SeedTransformation, std::size_t, std::size_t>(), py::arg("seed"),
           py::arg("duration"), py::arg("termination"))
      .def_property_readonly("num_physical", &ConvEncoder::num_physical)
      .def_property_readonly("num_logical", &ConvEncoder::num_logical)
      .def_property_readonly("num_syndrome", &ConvEncoder::num_syndrome)
      .def_property_readonly("rate", &ConvEncoder::rate)
      .def(
          "encode",
          [](const ConvEncoder& e, const std::string& logical, const std::string& stabilizers) {
            return e
                .encode(e.assemble_input(PauliString::parse(logical),
                                         PauliString::parse(stabilizers)))
                .str();
          },
          py::arg("logical"), py::arg("stabilizers"))
      .def(
          "syndrome",
          [](const ConvEncoder& e, const std::string& physical) {
            return to_list(e.syndrome(PauliString::parse(physical)));
          },
          py::arg("physical"))
      .def(
          "decode",
          [](const ConvEncoder& e, const std::vector<PauliDistribution>& physical_priors,
             const std::vector<int>& syndrome,
             const std::vector<PauliDistribution>& logical_priors) {
            const auto out =
                siso_decode(SisoInput{&e, physical_priors, logical_priors, from_list(syndrome)});
            return py::make_tuple(out.logical, out.physical);
          },
          py::arg("physical_priors"), py::arg("syndrome"),
          py::arg("logical_priors") = std::vector<PauliDistribution>{},
          "Exact marginal posteriors (logical, physical), each a list of [I, X, Y, Z].");

  py::class_<TurboCode>(mod, "TurboCode")
      .def_static(
          "from_spec",
          [](const std::filesystem::path& path, std::optional<std::size_t> outer_duration) {
            return load_turbo_spec_file(path).make_code(outer_duration);
          },
          py::arg("path"), py::arg("outer_duration") = std::nullopt)
      .def_property_readonly("num_logical", &TurboCode::num_logical)
      .def_property_readonly("num_physical", &TurboCode::num_physical)
      .def_property_readonly("rate", &TurboCode::rate)
      .def(
          "syndromes",
          [](const TurboCode& c, const std::string& physical) {
            const auto inv = c.encode_inverse(PauliString::parse(physical));
            return py::make_tuple(to_list(inv.inner_syndrome), to_list(inv.outer_syndrome),
                                  inv.logical.str());
          },
          py::arg("physical"),
          "(inner syndrome, outer syndrome, logical coset label) of a physical error.")
      .def(
          "decode",
          [](const TurboCode& c, const std::vector<PauliDistribution>& priors,
             const std::vector<int>& inner_syndrome, const std::vector<int>& outer_syndrome,
             std::size_t max_iterations, const std::string& messages) {
            TurboDecoderOptions opts;
            opts.max_iterations = max_iterations;
            opts.messages = parse_mode(messages);
            const auto r = turbo_decode(c, priors, from_list(inner_syndrome),
                                        from_list(outer_syndrome), opts);
            return py::make_tuple(r.estimate.str(), r.iterations);
          },
          py::arg("priors"), py::arg("inner_syndrome"), py::arg("outer_syndrome"),
          py::arg("max_iterations") = 20, py::arg("messages") = "posterior");

  mod.def(
      "simulate",
      [](const std::filesystem::path& spec_path, double p, std::size_t outer_duration,
         std::size_t trials, std::uint64_t seed, std::size_t max_iterations,
         const std::string& messages, unsigned threads) {
        const auto spec = load_turbo_spec_file(spec_path);
        SimulationOptions opts;
        opts.trials = trials;
        opts.master_seed = seed;
        opts.decoder = spec.decoder;
        opts.decoder.max_iterations = max_iterations;
        opts.decoder.messages = parse_mode(messages);
        opts.threads = threads;
        TrialReport r;
        {
          py::gil_scoped_release release;
          r = run_wer(spec.make_code(outer_duration), PauliChannel::depolarizing(p), opts);
        }
        return report_dict(r);
      },
      py::arg("spec"), py::arg("p"), py::arg("K"), py::arg("trials") = 1000,
      py::arg("seed") = 1, py::arg("max_iterations") = 20, py::arg("messages") = "posterior",
      py::arg("threads") = 0,
      "Word-error-rate estimate of the turbo code in `spec` on a depolarizing channel.");
}
