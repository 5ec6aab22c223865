#include "antirec/forms.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "antirec/checked.hpp"
#include "antirec/error.hpp"

namespace antirec {

LinearForm::LinearForm(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2)
        throw DimensionError("linear form needs dimension k >= 2, got " +
                             std::to_string(coeffs_.size()));
    for (auto c : coeffs_) {
        if (c < 1) throw DomainError("linear form coefficients must be positive");
        trace_ = checked::add(trace_, c);
    }
    kappa_ = checked::add(checked::mul(static_cast<std::int64_t>(coeffs_.size()), trace_), 1);
}

std::string LinearForm::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs_[i]);
    }
    return s;
}

LinearForm make_form(std::vector<std::int64_t> coeffs) { return LinearForm(std::move(coeffs)); }

LinearForm parse_form(const std::string& text) {
    std::vector<std::int64_t> coeffs;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        auto first = token.find_first_not_of(" \t");
        auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos) throw DomainError("empty coefficient in form '" + text + "'");
        std::string_view t(token.data() + first, last - first + 1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size())
            throw DomainError("not an integer coefficient: '" + std::string(t) + "'");
        coeffs.push_back(v);
    }
    return LinearForm(std::move(coeffs));
}

AntiRecurrenceGenerator::AntiRecurrenceGenerator(LinearForm form) : form_(std::move(form)) {}

AntiRecurrenceGenerator::Step AntiRecurrenceGenerator::next() {
    const auto& coeffs = form_.coeffs();
    Step step;
    step.block.reserve(coeffs.size());
    std::int64_t a = 0;
    for (auto c : coeffs) {
        // pending_ is sorted: A values come out strictly increasing.
        while (!pending_.empty() && pending_.front() == cursor_) {
            pending_.pop_front();
            cursor_ = checked::add(cursor_, 1);
        }
        step.block.push_back(cursor_);
        a = checked::add(a, checked::mul(c, cursor_));
        cursor_ = checked::add(cursor_, 1);
    }
    pending_.push_back(a);
    step.a = a;
    ++produced_;
    return step;
}

GenerationTable GenerationTable::generate(const LinearForm& form, std::size_t count) {
    if (count == 0) throw EmptyRangeError("generate needs count >= 1");
    const auto k = form.dimension();
    if (count > std::numeric_limits<std::size_t>::max() / k)
        throw RangeError("requested table is too large");
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
    a.reserve(count);
    b.reserve(count * k);
    AntiRecurrenceGenerator gen(form);
    for (std::size_t n = 0; n < count; ++n) {
        auto step = gen.next();
        a.push_back(step.a);
        b.insert(b.end(), step.block.begin(), step.block.end());
    }
    return GenerationTable(form, std::move(a), std::move(b));
}

GenerationTable GenerationTable::from_raw(LinearForm form, std::vector<std::int64_t> a_values,
                                          std::vector<std::int64_t> b_values) {
    return GenerationTable(std::move(form), std::move(a_values), std::move(b_values));
}

std::int64_t GenerationTable::a(std::size_t n) const {
    if (n < 1 || n > a_.size()) throw IndexError("A index out of range: " + std::to_string(n));
    return a_[n - 1];
}

std::int64_t GenerationTable::b(std::size_t n) const {
    if (n < 1 || n > b_.size()) throw IndexError("B index out of range: " + std::to_string(n));
    return b_[n - 1];
}

std::int64_t GenerationTable::b_sub(std::size_t j, std::size_t n) const {
    const auto k = form_.dimension();
    if (j < 1 || j > k) throw IndexError("B subsequence index j must be in 1..k");
    return b(j + (n - 1) * k);
}

std::span<const std::int64_t> GenerationTable::block(std::size_t n) const {
    const auto k = form_.dimension();
    if (n < 1 || n * k > b_.size()) throw IndexError("block index out of range: " + std::to_string(n));
    return std::span<const std::int64_t>(b_).subspan((n - 1) * k, k);
}

std::vector<std::int64_t> b_subseq(const LinearForm& form, std::size_t j, std::size_t count) {
    if (j < 1 || j > form.dimension()) throw IndexError("B subsequence index j must be in 1..k");
    if (count == 0) return {};
    std::vector<std::int64_t> out;
    out.reserve(count);
    AntiRecurrenceGenerator gen(form);
    for (std::size_t n = 0; n < count; ++n) out.push_back(gen.next().block[j - 1]);
    return out;
}

std::int64_t first_anti(const LinearForm& form) {
    std::int64_t s = 0;
    const auto& c = form.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j)
        s = checked::add(s, checked::mul(static_cast<std::int64_t>(j + 1), c[j]));
    return s;
}

bool is_a1_bounded(const LinearForm& form) {
    const auto k = static_cast<std::int64_t>(form.dimension());
    return first_anti(form) <= (k - 1) * form.trace() + 2;
}

std::vector<std::int64_t> gaps(const LinearForm& form, std::size_t count) {
    if (count < 2) throw EmptyRangeError("gaps needs count >= 2");
    AntiRecurrenceGenerator gen(form);
    std::vector<std::int64_t> out;
    out.reserve(count - 1);
    std::int64_t prev = gen.next().a;
    for (std::size_t n = 1; n < count; ++n) {
        std::int64_t cur = gen.next().a;
        out.push_back(cur - prev);
        prev = cur;
    }
    return out;
}

DifferenceWord difference_word(const GenerationTable& table) {
    const auto kappa = table.form().kappa();
    DifferenceWord w;
    if (table.size() == 0) return w;
    std::vector<std::int64_t> raw;
    raw.reserve(table.size());
    for (std::size_t n = 0; n < table.size(); ++n)
        raw.push_back(checked::sub(table.a_values()[n],
                                   checked::mul(kappa, static_cast<std::int64_t>(n))));
    w.offset = *std::min_element(raw.begin(), raw.end());
    w.digits.reserve(raw.size());
    for (auto r : raw) w.digits.push_back(r - w.offset);
    return w;
}

DifferenceWord difference_word(const LinearForm& form, std::size_t count) {
    if (count == 0) return {};
    return difference_word(GenerationTable::generate(form, count));
}

}  // namespace antirec
