#include "qturbo/encoder.hpp"

#include "qturbo/errors.hpp"

namespace qturbo {

ConvEncoder::ConvEncoder(SeedTransformation seed, std::size_t duration, std::size_t termination)
    : seed_(std::move(seed)), duration_(duration), termination_(termination) {
  if (duration_ + termination_ == 0) {
    throw ValidationError("encoder needs at least one time slice");
  }
}

std::vector<std::size_t> ConvEncoder::logical_positions() const {
  std::vector<std::size_t> out;
  out.reserve(num_logical());
  for (std::size_t i = 1; i <= duration_; ++i) {
    for (std::size_t j = 0; j < seed_.k(); ++j) {
      out.push_back(input_offset(i) + j);
    }
  }
  return out;
}

std::vector<std::size_t> ConvEncoder::syndrome_positions() const {
  std::vector<std::size_t> out;
  out.reserve(num_syndrome());
  for (std::size_t q = 0; q < seed_.m(); ++q) {
    out.push_back(q);
  }
  for (std::size_t i = 1; i <= slices(); ++i) {
    const std::size_t first = is_body_slice(i) ? seed_.k() : 0;
    for (std::size_t j = first; j < seed_.n(); ++j) {
      out.push_back(input_offset(i) + j);
    }
  }
  return out;
}

PauliString ConvEncoder::encode(const PauliString& input) const {
  if (input.num_qubits() != num_physical()) {
    throw DimensionError("input stream has " + std::to_string(input.num_qubits()) +
                         " qubits, encoder expects " + std::to_string(num_physical()));
  }
  PauliString v = input;
  const std::size_t w = seed_.width();
  for (std::size_t i = 1; i <= slices(); ++i) {
    const std::size_t off = physical_offset(i);
    v.write_packed(off, w, seed_.apply(v.packed(off, w)));
  }
  return v;
}

InverseEncoding ConvEncoder::inverse_encode(const PauliString& physical) const {
  if (physical.num_qubits() != num_physical()) {
    throw DimensionError("physical stream has " + std::to_string(physical.num_qubits()) +
                         " qubits, encoder expects " + std::to_string(num_physical()));
  }
  InverseEncoding result{physical, std::vector<std::uint64_t>(slices() + 1, 0)};
  PauliString& v = result.input;
  const std::size_t w = seed_.width();
  const std::size_t m = seed_.m();
  result.memory[slices()] = v.packed(physical_offset(slices()) + seed_.n(), m);
  for (std::size_t i = slices(); i >= 1; --i) {
    const std::size_t off = physical_offset(i);
    const std::uint64_t in = seed_.apply_inverse(v.packed(off, w));
    v.write_packed(off, w, in);
    result.memory[i - 1] = in & packed::mask(m);
  }
  return result;
}

BitVector ConvEncoder::syndrome(const PauliString& physical) const {
  const auto inv = inverse_encode(physical);
  const auto positions = syndrome_positions();
  BitVector out(positions.size());
  for (std::size_t s = 0; s < positions.size(); ++s) {
    out.set(s, inv.input.bits().get(2 * positions[s]));
  }
  return out;
}

PauliString ConvEncoder::logical_part(const PauliString& input) const {
  if (input.num_qubits() != num_physical()) {
    throw DimensionError("input stream size mismatch");
  }
  PauliString out(num_logical());
  const std::size_t k = seed_.k();
  for (std::size_t i = 1; i <= duration_; ++i) {
    out.write_packed((i - 1) * k, k, input.packed(input_offset(i), k));
  }
  return out;
}

PauliString ConvEncoder::syndrome_part(const PauliString& input) const {
  if (input.num_qubits() != num_physical()) {
    throw DimensionError("input stream size mismatch");
  }
  const auto positions = syndrome_positions();
  PauliString out(positions.size());
  for (std::size_t s = 0; s < positions.size(); ++s) {
    out.set(s, input[positions[s]]);
  }
  return out;
}

PauliString ConvEncoder::assemble_input(const PauliString& logical,
                                        const PauliString& stabilizers) const {
  if (logical.num_qubits() != num_logical() || stabilizers.num_qubits() != num_syndrome()) {
    throw DimensionError("logical or stabilizer stream has the wrong size");
  }
  PauliString out(num_physical());
  const auto lpos = logical_positions();
  const auto spos = syndrome_positions();
  for (std::size_t j = 0; j < lpos.size(); ++j) {
    out.set(lpos[j], logical[j]);
  }
  for (std::size_t s = 0; s < spos.size(); ++s) {
    out.set(spos[s], stabilizers[s]);
  }
  return out;
}

}  // namespace qturbo
