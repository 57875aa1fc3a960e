#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sbench {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Error taxonomy. Everything user-visible derives from Error so the CLI can
// map config problems to exit 2 and numerical aborts to exit 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NonFiniteInput : Error {
  using Error::Error;
};
struct NonFiniteGradient : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};
struct MissingSolution : Error {
  using Error::Error;
};
struct MissingHalfStep : Error {
  using Error::Error;
};
struct Uncertifiable : Error {
  using Error::Error;
};
struct EmptyEnsemble : Error {
  using Error::Error;
};

inline bool all_finite(const Vec& v) { return v.allFinite(); }

// Deterministic seed derivation for ensemble member k from a base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base + 0x9e3779b97f4a7c15ULL * (index + 1));
}

}  // namespace sbench
