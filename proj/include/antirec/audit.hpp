#pragma once

/**
 * @file audit.hpp
 * @brief Finite-range checks of identities and bounds on generated data.
 *
 * Every check scans an explicit index range and reports the first violation.
 * A passing report means "no violation up to range", nothing more.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "antirec/forms.hpp"

namespace antirec {

struct Counterexample {
    std::uint64_t index = 0;
    std::int64_t value = 0;
    std::string detail;

    bool operator==(const Counterexample&) const = default;
};

struct AuditReport {
    std::string claim;
    std::uint64_t range = 0;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    std::vector<std::string> notes;

    // Records the first violation; later calls are ignored.
    void fail(std::uint64_t index, std::int64_t value, std::string detail);

    // claim=<id> range=<N> pass=<bool> cex=<n:value|none>
    std::string line() const;
    // Multi-line human-readable form.
    std::string text() const;

    bool operator==(const AuditReport&) const = default;
};

// Earliest counterexample wins; ranges add up. Claims must match.
AuditReport merge(const AuditReport& x, const AuditReport& y);

enum class BoundTarget { A, B };

// lower <= scale * X_n - slope * n + shift <= upper, where X is A or B^block.
// A fractional slope s/d is written by scaling the whole line by d.
struct BoundSpec {
    std::string id;
    BoundTarget target = BoundTarget::A;
    std::size_t block = 1;  // j in B^j, ignored for A
    std::int64_t scale = 1;
    std::int64_t slope = 0;
    std::int64_t shift = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::string note;

    std::int64_t value(std::int64_t x, std::uint64_t n) const;
    std::string to_string() const;
    // DomainError if lower > upper, scale == 0 or block == 0.
    void validate() const;
};

// Kimberling's bound families for (1,2) and (2,1), three lines each
// (A, B^1, B^2). DomainError for any other form.
std::vector<BoundSpec> kimberling_bounds(const LinearForm& form);

AuditReport check_bounds(const LinearForm& form, const BoundSpec& spec, std::uint64_t upto);
AuditReport check_bounds(const GenerationTable& table, const BoundSpec& spec, std::uint64_t upto);

// A_n - 5n + 2 = PD_{n - lag} for the anti-Fibonacci numbers. lag must be 0
// or 1; the identity holds for lag 1 and lag 0 exists to show the off-by-one.
AuditReport check_zaslavsky(std::uint64_t upto, std::uint64_t lag = 1);

// Per-block mex conditions on the table:
//   B^1_n: every t in [1, B^1_n) is placed before block n, B^1_n is not
//   B^j_n, j >= 2: B^j_n - 1 is B^{j-1}_n or some A_m with m < n
//   A_n = sum a_j B^j_n
// plus the initial block 1..k.
AuditReport audit_mex(const LinearForm& form, std::uint64_t upto);
AuditReport audit_mex(const GenerationTable& table, std::uint64_t upto);

// A_{n tau + 1} = A_1 + n tau kappa for 0 <= n <= upto_blocks. The
// counterexample index is the block number n.
AuditReport check_progression(const LinearForm& form, std::uint64_t upto_blocks);

// A_n mod modulus != forbidden_residue for 1 <= n <= upto.
AuditReport check_divisibility(const LinearForm& form, std::int64_t modulus,
                               std::int64_t forbidden_residue, std::uint64_t upto);

using GapWord = std::vector<std::int64_t>;

// "696" -> {6,9,6}; gaps of 10 or more need dots: "10.6.6".
GapWord parse_gap_word(std::string_view text);
std::string gap_word_to_string(const GapWord& w);

// Cuts A_{m+1} - A_m, m = skip+1, skip+2, ..., into words of block_len and
// checks each of the first upto_blocks words against allowed.
AuditReport check_gap_blocks(const LinearForm& form, std::size_t block_len,
                             const std::set<GapWord>& allowed, std::uint64_t upto_blocks,
                             std::size_t skip = 0);

// Closed forms for the B sequences of the two-dimensional forms with trace 3:
//   (1,2): B^2_n = floor((A_n + 2) / 3), B^1_n = A_n - 2 B^2_n
//   (2,1): B^1_n = floor(A_n / 3),       B^2_n = A_n - 2 B^1_n
// DomainError for any other form.
AuditReport check_b_derivation(const LinearForm& form, std::uint64_t upto);

}  // namespace antirec
