#pragma once

/**
 * @file forms.hpp
 * @brief Positive linear forms and the anti-recurrence sequences they generate.
 *
 * A form a = (a_1, ..., a_k) with k >= 2 and a_i >= 1 splits the positive
 * integers into two complementary increasing sequences A and B. B is cut into
 * consecutive blocks of k entries, and every block produces one A value:
 *
 *   A_n = a_1 B_{(n-1)k+1} + ... + a_k B_{nk}
 *
 * Blocks are filled greedily: each new block takes the k smallest integers
 * not yet placed in A or B.
 */

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <vector>

namespace antirec {

class LinearForm {
public:
    // Throws DimensionError for k < 2 and DomainError for a nonpositive entry.
    explicit LinearForm(std::vector<std::int64_t> coeffs);

    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    std::size_t dimension() const noexcept { return coeffs_.size(); }
    std::int64_t trace() const noexcept { return trace_; }
    // k * trace + 1: the interval length and modulus of the residue dynamics.
    std::int64_t kappa() const noexcept { return kappa_; }

    // "1,2,3"
    std::string to_string() const;

    bool operator==(const LinearForm&) const = default;

private:
    std::vector<std::int64_t> coeffs_;
    std::int64_t trace_ = 0;
    std::int64_t kappa_ = 0;
};

LinearForm make_form(std::vector<std::int64_t> coeffs);

// Parses "1,2" (whitespace tolerated). Errors as for make_form, plus
// DomainError on tokens that are not integers.
LinearForm parse_form(const std::string& text);

// Produces A_1, A_2, ... one block at a time. Memory beyond the caller's
// copies is the handful of A values that lie above the mex cursor.
class AntiRecurrenceGenerator {
public:
    explicit AntiRecurrenceGenerator(LinearForm form);

    struct Step {
        std::int64_t a;
        std::vector<std::int64_t> block;
    };

    Step next();

    // Number of A values produced so far.
    std::size_t produced() const noexcept { return produced_; }
    const LinearForm& form() const noexcept { return form_; }

private:
    LinearForm form_;
    std::int64_t cursor_ = 1;
    std::deque<std::int64_t> pending_;
    std::size_t produced_ = 0;
};

class GenerationTable {
public:
    // Builds A_1..A_count by the mex rule. count == 0 throws EmptyRangeError.
    static GenerationTable generate(const LinearForm& form, std::size_t count);

    // Wraps caller-supplied data without checking any invariant. Used to feed
    // audits deliberately broken tables.
    static GenerationTable from_raw(LinearForm form,
                                    std::vector<std::int64_t> a_values,
                                    std::vector<std::int64_t> b_values);

    const LinearForm& form() const noexcept { return form_; }
    std::size_t size() const noexcept { return a_.size(); }

    // 0-based storage; a(n) and b(n) take the 1-based indices used in the math.
    std::span<const std::int64_t> a_values() const noexcept { return a_; }
    std::span<const std::int64_t> b_values() const noexcept { return b_; }
    std::int64_t a(std::size_t n) const;
    std::int64_t b(std::size_t n) const;
    // B^j_n = B_{j + (n-1)k}
    std::int64_t b_sub(std::size_t j, std::size_t n) const;
    std::span<const std::int64_t> block(std::size_t n) const;

    bool operator==(const GenerationTable&) const = default;

private:
    GenerationTable(LinearForm form, std::vector<std::int64_t> a, std::vector<std::int64_t> b)
        : form_(std::move(form)), a_(std::move(a)), b_(std::move(b)) {}

    LinearForm form_;
    std::vector<std::int64_t> a_;
    std::vector<std::int64_t> b_;
};

inline GenerationTable generate(const LinearForm& form, std::size_t count) {
    return GenerationTable::generate(form, count);
}

// B^j_1 .. B^j_count for 1 <= j <= k.
std::vector<std::int64_t> b_subseq(const LinearForm& form, std::size_t j, std::size_t count);

// A_1 = sum of j * a_j, without generating.
std::int64_t first_anti(const LinearForm& form);

bool is_a1_bounded(const LinearForm& form);

// A_{n+1} - A_n for n = 1..count-1.
std::vector<std::int64_t> gaps(const LinearForm& form, std::size_t count);

struct DifferenceWord {
    std::int64_t offset = 0;
    std::vector<std::int64_t> digits;
};

// d_n = A_{n+1} - kappa*n - offset for n = 0..count-1, where offset is the
// minimum of A_{n+1} - kappa*n over the window.
DifferenceWord difference_word(const LinearForm& form, std::size_t count);
DifferenceWord difference_word(const GenerationTable& table);

}  // namespace antirec
