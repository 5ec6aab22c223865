#pragma once

/**
 * @file morphic.hpp
 * @brief Uniform substitutions, their fixed points, and the bridge to DFAOs.
 *
 * A substitution of constant length L whose seed image starts with the seed
 * has a fixed point omega with omega[L*n + j] = image(omega[n])[j]. Reading
 * n in base L from the most significant digit walks exactly that recursion,
 * which is why a substitution and an msd DFAO with delta(q0, 0) = q0 carry
 * the same information.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antirec/error.hpp"
#include "antirec/forms.hpp"
#include "antirec/machine.hpp"

namespace antirec {

using Letter = std::int64_t;
using Word = std::vector<Letter>;
using Coding = std::map<Letter, std::int64_t>;

class UniformSubstitution {
public:
    // DomainError unless length >= 2, every image has exactly `length`
    // letters drawn from the key set, the seed is a key, and the seed's image
    // starts with the seed.
    UniformSubstitution(std::size_t length, Letter seed, std::map<Letter, Word> images);

    std::size_t length() const noexcept { return length_; }
    Letter seed() const noexcept { return seed_; }
    const std::map<Letter, Word>& images() const noexcept { return images_; }
    const Word& image(Letter a) const;
    std::vector<Letter> alphabet() const;

    bool operator==(const UniformSubstitution&) const = default;

private:
    std::size_t length_;
    Letter seed_;
    std::map<Letter, Word> images_;
};

// First `count` letters of the fixed point grown from the seed.
Word fixed_point(const UniformSubstitution& s, std::size_t count);

// omega[n] in O(log n), by walking the base-L digits of n.
Letter letter_at(const UniformSubstitution& s, std::uint64_t n);

struct CobhamPair {
    UniformSubstitution substitution;
    Coding coding;
};

// Letters are state ids, images are the rows of the transition table and the
// coding is the output map. Requires an msd machine with delta(q0, 0) = q0
// (NoFixedPointError otherwise).
CobhamPair dfao_to_substitution(const Dfao& m);

// Base-L msd machine whose state for letter a steps to image(a)[d] on digit
// d. The seed becomes state 0, other letters follow in increasing order.
// DomainError if the coding misses a letter.
Dfao substitution_to_dfao(const UniformSubstitution& s, const Coding& coding);

// Identity coding on the alphabet.
Coding natural_coding(const UniformSubstitution& s);

// The k-uniform substitution for the anti-k-bonacci difference sequence.
// Alphabet {1..k} for even k, {0..k-1} for odd k; every image starts with
// floor(k/2), which is also the seed.
UniformSubstitution antibonacci_substitution(int k);

// A_n = kappa (n - 1) + t_k - floor(k/2) + omega[n - 1], with kappa = k^2 + 1
// and t_k = k (k + 1) / 2.
std::int64_t antibonacci_term(int k, std::uint64_t n);

// Letters describe where A_j sits inside I_j = [(j-1) kappa + 1, j kappa]:
// the letter of j is A_j - (j-1) kappa, in 1..kappa. The substitution maps
// the letter of A_j to the letters of the tau anti-recurrences that the
// B-blocks inside I_j generate.
struct ResidueSystem {
    LinearForm form;
    std::int64_t modulus = 0;
    std::vector<Letter> letters;
    std::map<Letter, Word> word_map;
    Letter seed = 0;
    // Intervals scanned before the construction was accepted.
    std::size_t intervals_checked = 0;

    UniformSubstitution substitution() const;
    // A_n rebuilt from the fixed point, n >= 1.
    std::int64_t term(std::uint64_t n) const;
};

// Raised when the simulated generation contradicts the interval structure:
// a letter with two different images, an A value outside its interval, too
// many letters, or no closure within the iteration cap.
class ClosureFailure : public Error {
public:
    ClosureFailure(std::string reason, std::size_t interval)
        : Error("interval substitution failed at interval " + std::to_string(interval) + ": " +
                reason),
          interval_(interval) {}

    std::size_t interval() const noexcept { return interval_; }

private:
    std::size_t interval_;
};

// PreconditionError unless the form is A_1-bounded; pass
// require_a1_bounded = false to attempt the construction anyway.
ResidueSystem derive_interval_substitution(const LinearForm& form, bool require_a1_bounded = true);

// Text format:
//   length <L> seed <s>
//   <letter>: <l_1> <l_2> ... <l_L>     (one line per letter, increasing)
std::string serialize(const UniformSubstitution& s);
UniformSubstitution parse_substitution(std::string_view text);

}  // namespace antirec
