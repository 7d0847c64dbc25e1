// Linear algebra over F_p for primes p = 1 mod m, used to solve systems over Q(zeta_m)
// one embedding at a time, and rational reconstruction of the results.
#pragma once

#include "eisprod/rational.hpp"
#include "eisprod/arith.hpp"

#include <optional>
#include <vector>

namespace eisprod {

// Primes p = 1 mod m below 2^62, in decreasing order starting after `after` (0 = from the top).
u64 next_prime_one_mod(u64 m, u64 after = 0);

// A primitive m-th root of unity modulo p, for p = 1 mod m.
u64 primitive_root_of_unity(u64 m, u64 p);

class ModMatrix {
public:
    ModMatrix() = default;
    ModMatrix(std::size_t rows, std::size_t cols, u64 p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    u64 modulus() const { return p_; }
    u64& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    u64 at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ModMatrix transposed() const;

    // In-place reduced row echelon form; returns the pivot columns in increasing order.
    std::vector<std::size_t> rref();

private:
    std::size_t rows_ = 0, cols_ = 0;
    u64 p_ = 2;
    std::vector<u64> data_;
};

std::size_t rank_mod(ModMatrix m);

// Inverse of an invertible square matrix; nullopt if singular.
std::optional<ModMatrix> inverse_mod(const ModMatrix& m);

// p/q with |p|, |q| <= sqrt(M/2) and p = q a mod M, if one exists.
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& M);

} // namespace eisprod
