#include "qturbo/seed.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qturbo/errors.hpp"

namespace qturbo {

namespace {

// Internal qubit index of listing qubit `q` for rows (inputs) and columns (outputs).
std::size_t internal_row_qubit(SeedLayout layout, std::size_t n, std::size_t m, std::size_t q) {
  if (layout == SeedLayout::MemoryFirst) {
    return q;
  }
  return q < n ? m + q : q - n;
}

std::size_t internal_col_qubit(SeedLayout layout, std::size_t n, std::size_t m, std::size_t q) {
  if (layout == SeedLayout::MemoryFirst) {
    return q;
  }
  return q < m ? n + q : q - m;
}

}  // namespace

SeedTransformation::PackedMap::PackedMap(const BinaryMatrix& a) {
  if (a.rows() > 64 || a.cols() > 64) {
    throw BudgetError("packed seed maps support at most 32 qubits");
  }
  const std::size_t chunks = (a.rows() + 7) / 8;
  tables_.resize(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    for (std::size_t byte = 0; byte < 256; ++byte) {
      std::uint64_t out = 0;
      for (std::size_t b = 0; b < 8; ++b) {
        const std::size_t r = 8 * c + b;
        if (r < a.rows() && ((byte >> b) & 1U)) {
          out ^= a.row(r).read(0, a.cols());
        }
      }
      tables_[c][byte] = out;
    }
  }
}

SeedTransformation::SeedTransformation(std::size_t n, std::size_t k, std::size_t m,
                                       SymplecticMatrix u)
    : n_(n), k_(k), m_(m), u_(std::move(u)) {
  if (k > n || n == 0) {
    throw ValidationError("seed parameters need 0 <= k <= n and n >= 1");
  }
  if (u_.num_qubits() != n + m) {
    throw DimensionError("seed matrix must act on n + m qubits");
  }
  if (n + m > 32) {
    throw BudgetError("seed transformations are limited to n + m <= 32 qubits");
  }
  forward_ = PackedMap(u_.matrix());
  inverse_ = PackedMap(u_.inverse().matrix());
}

BinaryMatrix SeedTransformation::sigma_rows() const {
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < n_ - k_; ++i) {
    rows.push_back(u_.matrix().row(2 * (m_ + k_ + i) + 1));
  }
  return BinaryMatrix(std::move(rows), 2 * (n_ + m_));
}

BinaryMatrix SeedTransformation::sigma_physical() const {
  return sigma_rows().block(0, n_ - k_, 0, 2 * n_);
}

BinaryMatrix SeedTransformation::sigma_memory() const {
  return sigma_rows().block(0, n_ - k_, 2 * n_, 2 * m_);
}

BinaryMatrix SeedTransformation::effective() const {
  std::vector<BitVector> rows;
  for (std::size_t r = 0; r < 2 * (m_ + k_); ++r) {
    rows.push_back(u_.matrix().row(r));
  }
  for (const auto& r : sigma_rows().row_vectors()) {
    rows.push_back(r);
  }
  return BinaryMatrix(std::move(rows), 2 * (n_ + m_));
}

SeedLayout parse_layout(const std::string& name) {
  if (name == "memory-last") {
    return SeedLayout::MemoryLast;
  }
  if (name == "memory-first") {
    return SeedLayout::MemoryFirst;
  }
  throw ValidationError("unknown seed layout '" + name + "'");
}

std::string layout_name(SeedLayout layout) {
  return layout == SeedLayout::MemoryLast ? "memory-last" : "memory-first";
}

SeedTransformation seed_from_rows(std::size_t n, std::size_t k, std::size_t m,
                                  const std::vector<std::uint64_t>& rows, SeedLayout layout) {
  const std::size_t qubits = n + m;
  const std::size_t width = 2 * qubits;
  if (k > n) {
    throw ValidationError("seed needs k <= n");
  }
  if (qubits > 32) {
    throw BudgetError("seed transformations are limited to n + m <= 32 qubits");
  }
  if (rows.size() != width) {
    throw ValidationError("seed listing needs exactly 2(n+m) = " + std::to_string(width) +
                          " rows, got " + std::to_string(rows.size()));
  }
  BinaryMatrix u(width, width);
  for (std::size_t r = 0; r < width; ++r) {
    if (width < 64 && (rows[r] >> width) != 0) {
      throw ValidationError("row integer " + std::to_string(rows[r]) + " exceeds width " +
                            std::to_string(width) + " bits");
    }
    const std::size_t ir = 2 * internal_row_qubit(layout, n, m, r / 2) + (r % 2);
    for (std::size_t c = 0; c < width; ++c) {
      if ((rows[r] >> (width - 1 - c)) & 1U) {
        const std::size_t ic = 2 * internal_col_qubit(layout, n, m, c / 2) + (c % 2);
        u.set(ir, ic, true);
      }
    }
  }
  return SeedTransformation(n, k, m, SymplecticMatrix(std::move(u)));
}

std::vector<std::uint64_t> seed_to_rows(const SeedTransformation& seed, SeedLayout layout) {
  const std::size_t n = seed.n();
  const std::size_t m = seed.m();
  const std::size_t width = 2 * (n + m);
  std::vector<std::uint64_t> rows(width, 0);
  for (std::size_t r = 0; r < width; ++r) {
    const std::size_t ir = 2 * internal_row_qubit(layout, n, m, r / 2) + (r % 2);
    for (std::size_t c = 0; c < width; ++c) {
      const std::size_t ic = 2 * internal_col_qubit(layout, n, m, c / 2) + (c % 2);
      if (seed.matrix().matrix().get(ir, ic)) {
        rows[r] |= std::uint64_t{1} << (width - 1 - c);
      }
    }
  }
  return rows;
}

SeedTransformation load_seed(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("seed file is not valid JSON: ") + e.what());
  }
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto k = j.at("k").get<std::size_t>();
    const auto m = j.at("m").get<std::size_t>();
    std::vector<std::uint64_t> rows;
    for (const auto& r : j.at("rows")) {
      if (!r.is_number_unsigned()) {
        throw ValidationError("seed rows must be non-negative integers");
      }
      rows.push_back(r.get<std::uint64_t>());
    }
    const SeedLayout layout =
        j.contains("layout") ? parse_layout(j.at("layout").get<std::string>()) : SeedLayout::MemoryLast;
    return seed_from_rows(n, k, m, rows, layout);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed seed file: ") + e.what());
  }
}

SeedTransformation load_seed_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open seed file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_seed(buffer.str());
}

std::string store_seed(const SeedTransformation& seed, SeedLayout layout) {
  nlohmann::ordered_json j;
  j["n"] = seed.n();
  j["k"] = seed.k();
  j["m"] = seed.m();
  j["layout"] = layout_name(layout);
  j["rows"] = seed_to_rows(seed, layout);
  return j.dump() + "\n";
}

}  // namespace qturbo
