#pragma once

// Seeded random inputs for property tests and fuzzing.

#include "flipcalc/dsl.hpp"
#include "flipcalc/hodge.hpp"
#include "flipcalc/motive.hpp"
#include "flipcalc/sod.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace flipcalc::testkit {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi);

  /// Hodge-symmetric and Serre-dual, dim in [0, max_dim], entries in [0, max_entry].
  hodge::HodgeDiamond symmetric_diamond(int max_dim, long max_entry);
  /// Arbitrary nonnegative table whose entries sum to at most max_total.
  hodge::HodgeDiamond small_diamond(int max_dim, long max_total);

  /// Atoms from {X, F, C, Z}, L powers up to 4, coefficients in [-5, 5].
  motive::Motive motive(int max_terms = 5);
  /// Atoms from {DC, Dpt, DX, DSym2C}, multiplicities in [1, 30].
  sod::Ledger ledger(int max_atoms = 4);
  /// A well-formed expression tree with nonnegative literals.
  dsl::Node expression(int depth = 3);

  /// Up to max_len bytes mixing grammar tokens and arbitrary bytes.
  std::string fuzz_bytes(std::size_t max_len = 4096);

 private:
  std::mt19937_64 rng_;
};

}  // namespace flipcalc::testkit
