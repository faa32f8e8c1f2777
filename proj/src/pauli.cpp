#include "qturbo/pauli.hpp"

#include <algorithm>

#include "qturbo/errors.hpp"

namespace qturbo {

char pauli_char(Pauli p) {
  constexpr std::array<char, 4> chars{'I', 'X', 'Y', 'Z'};
  return chars[static_cast<std::size_t>(p)];
}

PauliString::PauliString(BitVector bits) : bits_(std::move(bits)) {
  if (bits_.size() % 2 != 0) {
    throw DimensionError("Pauli string needs an even number of bits");
  }
}

PauliString PauliString::parse(std::string_view text) {
  std::size_t n = 0;
  for (char c : text) {
    if (c != ':') {
      ++n;
    }
  }
  PauliString out(n);
  std::size_t j = 0;
  for (char c : text) {
    switch (c) {
      case ':':
        continue;
      case 'I':
      case '_':
        break;
      case 'X':
        out.set(j, Pauli::X);
        break;
      case 'Y':
        out.set(j, Pauli::Y);
        break;
      case 'Z':
        out.set(j, Pauli::Z);
        break;
      default:
        throw ValidationError(std::string("invalid Pauli character '") + c + "'");
    }
    ++j;
  }
  return out;
}

PauliString PauliString::from_packed(std::size_t num_qubits, std::uint64_t value) {
  PauliString out(num_qubits);
  out.write_packed(0, num_qubits, value);
  return out;
}

PauliString PauliString::slice(std::size_t first, std::size_t count) const {
  if (first + count > num_qubits()) {
    throw DimensionError("slice exceeds Pauli string");
  }
  PauliString out(count);
  for (std::size_t q = 0; q < count; q += 32) {
    const std::size_t chunk = std::min<std::size_t>(32, count - q);
    out.write_packed(q, chunk, packed(first + q, chunk));
  }
  return out;
}

void PauliString::assign(std::size_t first, const PauliString& part) {
  if (first + part.num_qubits() > num_qubits()) {
    throw DimensionError("assignment exceeds Pauli string");
  }
  for (std::size_t q = 0; q < part.num_qubits(); q += 32) {
    const std::size_t chunk = std::min<std::size_t>(32, part.num_qubits() - q);
    write_packed(first + q, chunk, part.packed(q, chunk));
  }
}

PauliString PauliString::join(const PauliString& tail) const {
  PauliString out(num_qubits() + tail.num_qubits());
  out.assign(0, *this);
  out.assign(num_qubits(), tail);
  return out;
}

PauliString& PauliString::operator+=(const PauliString& other) {
  if (other.num_qubits() != num_qubits()) {
    throw DimensionError("Pauli strings act on different qubit counts");
  }
  bits_ ^= other.bits_;
  return *this;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::uint64_t word : bits_.words()) {
    w += static_cast<std::size_t>(packed::weight(word));
  }
  return w;
}

std::pair<PauliString, PauliString> PauliString::xz_split() const {
  PauliString x = *this;
  PauliString z = *this;
  for (auto& w : x.bits_.words()) {
    w &= packed::kXMask;
  }
  for (auto& w : z.bits_.words()) {
    w &= ~packed::kXMask;
  }
  return {std::move(x), std::move(z)};
}

std::string PauliString::str() const {
  std::string out(num_qubits(), 'I');
  for (std::size_t j = 0; j < num_qubits(); ++j) {
    out[j] = pauli_char((*this)[j]);
  }
  return out;
}

bool star(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("star product of Pauli strings on different qubit counts");
  }
  auto a = p.bits().words();
  auto b = q.bits().words();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc ^= a[i] & packed::swap_pairs(b[i]);
  }
  return (std::popcount(acc) & 1) != 0;
}

}  // namespace qturbo
