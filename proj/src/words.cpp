#include "ncshift/words.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace ncshift {

FiniteWord FiniteWord::from_digits(std::string_view digits) {
    std::vector<Letter> letters;
    letters.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad letter digit in word");
        letters.push_back(static_cast<Letter>(c - '0'));
    }
    return FiniteWord(std::move(letters));
}

FiniteWord FiniteWord::slice(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) throw std::out_of_range("FiniteWord::slice");
    return FiniteWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                          letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Letter FiniteWord::max_letter() const noexcept {
    return empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

FiniteWord concat(const FiniteWord& a, const FiniteWord& b) {
    std::vector<Letter> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return FiniteWord(std::move(out));
}

FiniteWord power(const FiniteWord& w, std::size_t exponent) {
    std::vector<Letter> out;
    out.reserve(w.size() * exponent);
    for (std::size_t e = 0; e < exponent; ++e) out.insert(out.end(), w.begin(), w.end());
    return FiniteWord(std::move(out));
}

std::string to_string(const FiniteWord& w, std::size_t n) {
    std::string out;
    if (n <= 9) {
        for (Letter l : w) out.push_back(static_cast<char>('0' + l));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(w[i]);
    }
    return out;
}

FiniteWord parse_word(std::string_view text, std::size_t n) {
    std::vector<Letter> letters;
    if (n <= 9) {
        for (char c : text) {
            if (c < '1' || c > '9' || static_cast<std::size_t>(c - '0') > n)
                throw std::invalid_argument("letter out of alphabet in word '" + std::string(text) + "'");
            letters.push_back(static_cast<Letter>(c - '0'));
        }
        return FiniteWord(std::move(letters));
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (token.empty()) throw std::invalid_argument("empty letter in word");
        std::size_t value = 0;
        for (char c : token) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad letter in word");
            value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        if (value < 1 || value > n) throw std::invalid_argument("letter out of alphabet in word");
        letters.push_back(static_cast<Letter>(value));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return FiniteWord(std::move(letters));
}

PrimitiveDecomposition primitive_root(const FiniteWord& w) {
    if (w.empty()) throw std::invalid_argument("primitive_root: empty word");
    const std::size_t len = w.size();
    for (std::size_t d = 1; d <= len; ++d) {
        if (len % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < len && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return {w.slice(0, d), len / d};
    }
    return {w, 1};  // unreachable: d == len always succeeds
}

bool is_primitive(const FiniteWord& w) { return !w.empty() && primitive_root(w).exponent == 1; }

std::vector<FiniteWord> all_words(std::size_t n, std::size_t len) {
    std::vector<FiniteWord> out;
    std::vector<Letter> cur(len, 1);
    while (true) {
        out.emplace_back(cur);
        std::size_t i = len;
        while (i > 0 && cur[i - 1] == n) cur[--i] = 1;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

std::optional<std::size_t> power_exponent(const FiniteWord& u, const FiniteWord& v) {
    if (v.empty() || u.empty() || u.size() % v.size() != 0) return std::nullopt;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i % v.size()]) return std::nullopt;
    return u.size() / v.size();
}

PowerLemmaReport check_power_lemma(std::size_t n, std::size_t max_u, std::size_t max_v,
                                   std::size_t max_exp) {
    PowerLemmaReport report;
    std::vector<FiniteWord> us, vs;
    for (std::size_t len = 1; len <= max_u; ++len)
        for (auto& w : all_words(n, len)) us.push_back(std::move(w));
    for (std::size_t len = 1; len <= max_v; ++len)
        for (auto& w : all_words(n, len))
            if (is_primitive(w)) vs.push_back(std::move(w));

    for (const auto& u : us) {
        for (const auto& v : vs) {
            for (std::size_t l = 1; l <= max_exp; ++l) {
                for (std::size_t m = 1; m <= max_exp; ++m) {
                    if (u.size() * l != v.size() * m) continue;
                    if (power(u, l) != power(v, m)) continue;
                    ++report.instances;
                    if (!power_exponent(u, v)) {
                        if (!report.first_violation) report.first_violation = PowerInstance{u, v, l, m};
                        ++report.violations;
                    }
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

InfiniteWord InfiniteWord::periodic(FiniteWord period) { return eventually_periodic({}, std::move(period)); }

InfiniteWord InfiniteWord::eventually_periodic(FiniteWord preperiod, FiniteWord period) {
    if (period.empty()) throw std::invalid_argument("infinite word: period must be nonempty");
    InfiniteWord w;
    w.period_ = primitive_root(period).root;
    w.preperiod_ = std::move(preperiod);
    // Absorb the tail of the preperiod into the period by rotating it.
    while (!w.preperiod_.empty() && w.preperiod_.back() == w.period_.back()) {
        std::vector<Letter> rotated;
        rotated.reserve(w.period_.size());
        rotated.push_back(w.period_.back());
        rotated.insert(rotated.end(), w.period_.begin(), w.period_.end() - 1);
        w.period_ = FiniteWord(std::move(rotated));
        w.preperiod_.pop_back();
    }
    return w;
}

InfiniteWord InfiniteWord::generated(std::string name, LetterFn letter_fn, bool certified_aperiodic) {
    if (!letter_fn) throw std::invalid_argument("generated word needs a letter function");
    InfiniteWord w;
    w.generator_ = std::make_shared<const Generator>(Generator{std::move(name), std::move(letter_fn), certified_aperiodic});
    return w;
}

InfiniteWord InfiniteWord::thue_morse() {
    return generated(
        "thue_morse",
        [](std::size_t m) -> Letter { return 1 + (std::popcount(static_cast<std::uint64_t>(m - 1)) & 1U); },
        true);
}

namespace {

std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// floor(m * golden ratio), exact for m well below 2^31.
std::uint64_t floor_golden(std::uint64_t m) { return (m + isqrt(5 * m * m)) / 2; }

}  // namespace

InfiniteWord InfiniteWord::fibonacci() {
    // Standard Sturmian coding 0100101001001... shifted onto {1, 2}.
    return generated(
        "fibonacci",
        [](std::size_t m) -> Letter {
            return static_cast<Letter>(3 + floor_golden(m) - floor_golden(m + 1));
        },
        true);
}

std::optional<InfiniteWord> InfiniteWord::builtin(std::string_view name) {
    if (name == "thue_morse") return thue_morse();
    if (name == "fibonacci") return fibonacci();
    return std::nullopt;
}

const std::string& InfiniteWord::name() const {
    static const std::string periodic_name = "eventually_periodic";
    return generator_ ? generator_->name : periodic_name;
}

bool InfiniteWord::certified_aperiodic() const noexcept { return generator_ && generator_->certified; }

Letter InfiniteWord::at(std::size_t m) const {
    if (m == 0) throw std::invalid_argument("letter index is 1-based");
    if (generator_) return generator_->letter_fn(m);
    if (m <= preperiod_.size()) return preperiod_[m - 1];
    return period_[(m - preperiod_.size() - 1) % period_.size()];
}

FiniteWord InfiniteWord::prefix(std::size_t m) const {
    std::vector<Letter> out;
    out.reserve(m);
    for (std::size_t t = 1; t <= m; ++t) out.push_back(at(t));
    return FiniteWord(std::move(out));
}

std::string InfiniteWord::describe(std::size_t n) const {
    if (generator_) return generator_->name;
    std::string out = to_string(preperiod_, n);
    if (!out.empty()) out += ".";
    return out + "(" + to_string(period_, n) + ")^inf";
}

WordClassification classify_infinite(const InfiniteWord& omega) {
    if (omega.is_generated()) return AperiodicWord{omega.name(), omega.certified_aperiodic()};
    if (omega.preperiod().empty()) return PeriodicWord{omega.period()};
    return EventuallyPeriodicWord{omega.preperiod(), omega.period()};
}

ShiftTail shift_tail_normalize(const InfiniteWord& omega) {
    if (omega.is_generated()) throw std::domain_error("shift_tail_normalize: aperiodic word");
    return {InfiniteWord::periodic(omega.period()), omega.preperiod().size()};
}

std::size_t reverse_suffix_match(const FiniteWord& v, const InfiniteWord& omega) {
    if (!omega.is_purely_periodic()) throw std::domain_error("reverse_suffix_match: word is not purely periodic");
    const FiniteWord& v0 = omega.period();
    const std::size_t p = v0.size();
    std::size_t s = 0;
    while (s < v.size() && v[v.size() - 1 - s] == v0[p - 1 - (s % p)]) ++s;
    return s;
}

}  // namespace ncshift
