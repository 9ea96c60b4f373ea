#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ncshift {

// Letters are 1-based: the alphabet of size n is {1, ..., n}.
using Letter = std::uint32_t;

class FiniteWord {
public:
    FiniteWord() = default;
    FiniteWord(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit FiniteWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    // Parses the compact digit form, e.g. "1212". Intended for tests and
    // literals; use parse_word() for the general serialization.
    static FiniteWord from_digits(std::string_view digits);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    void push_back(Letter l) { letters_.push_back(l); }
    void pop_back() { letters_.pop_back(); }

    // Letters [pos, pos + len).
    FiniteWord slice(std::size_t pos, std::size_t len) const;
    FiniteWord drop_front(std::size_t count = 1) const { return slice(count, size() - count); }
    bool ends_with(Letter l) const noexcept { return !empty() && back() == l; }
    bool starts_with(Letter l) const noexcept { return !empty() && front() == l; }

    Letter max_letter() const noexcept;

    friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
    friend std::strong_ordering operator<=>(const FiniteWord& a, const FiniteWord& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

FiniteWord concat(const FiniteWord& a, const FiniteWord& b);
FiniteWord power(const FiniteWord& w, std::size_t exponent);

// Digits "1".."9" for n <= 9, comma-separated integers otherwise; the empty
// word is the empty string.
std::string to_string(const FiniteWord& w, std::size_t n = 9);
FiniteWord parse_word(std::string_view text, std::size_t n = 9);

struct PrimitiveDecomposition {
    FiniteWord root;
    std::size_t exponent = 0;
};

// Shortest root with root^exponent == w. Throws std::invalid_argument on the
// empty word.
PrimitiveDecomposition primitive_root(const FiniteWord& w);
bool is_primitive(const FiniteWord& w);

// All words over {1..n} of length exactly len, in lexicographic order.
std::vector<FiniteWord> all_words(std::size_t n, std::size_t len);

// Exhaustive check of: u^l == v^m with v primitive implies u == v^j, j >= 1.
struct PowerInstance {
    FiniteWord u;
    FiniteWord v;
    std::size_t l = 0;
    std::size_t m = 0;
};

struct PowerLemmaReport {
    std::size_t instances = 0;
    std::size_t violations = 0;
    std::optional<PowerInstance> first_violation;
    bool passed() const noexcept { return violations == 0; }
};

PowerLemmaReport check_power_lemma(std::size_t n, std::size_t max_u, std::size_t max_v,
                                   std::size_t max_exp);

// If u == v^j for some j >= 1 returns j.
std::optional<std::size_t> power_exponent(const FiniteWord& u, const FiniteWord& v);

// One-sided infinite word i_1 i_2 ... Either eventually periodic (stored in
// normal form: primitive period, minimal preperiod) or supplied by a named
// generator.
class InfiniteWord {
public:
    using LetterFn = std::function<Letter(std::size_t)>;

    static InfiniteWord periodic(FiniteWord period);
    static InfiniteWord eventually_periodic(FiniteWord preperiod, FiniteWord period);
    static InfiniteWord generated(std::string name, LetterFn letter_fn, bool certified_aperiodic);

    // Built-in aperiodic generators on {1, 2}.
    static InfiniteWord thue_morse();
    static InfiniteWord fibonacci();
    static std::optional<InfiniteWord> builtin(std::string_view name);

    bool is_generated() const noexcept { return generator_ != nullptr; }
    bool is_purely_periodic() const noexcept { return !is_generated() && preperiod_.empty(); }
    bool is_eventually_periodic() const noexcept { return !is_generated(); }

    const FiniteWord& preperiod() const noexcept { return preperiod_; }
    const FiniteWord& period() const noexcept { return period_; }
    const std::string& name() const;
    bool certified_aperiodic() const noexcept;

    // i_m for m >= 1.
    Letter at(std::size_t m) const;
    // omega_m = i_1 ... i_m; omega_0 is the empty word.
    FiniteWord prefix(std::size_t m) const;

    std::string describe(std::size_t n = 9) const;

private:
    struct Generator {
        std::string name;
        LetterFn letter_fn;
        bool certified = false;
    };

    FiniteWord preperiod_;
    FiniteWord period_;
    std::shared_ptr<const Generator> generator_;
};

struct PeriodicWord {
    FiniteWord v0;
    friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;
};
struct EventuallyPeriodicWord {
    FiniteWord u;
    FiniteWord v0;
    friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;
};
struct AperiodicWord {
    std::string name;
    bool certified = false;
    friend bool operator==(const AperiodicWord&, const AperiodicWord&) = default;
};
using WordClassification = std::variant<PeriodicWord, EventuallyPeriodicWord, AperiodicWord>;

WordClassification classify_infinite(const InfiniteWord& omega);

struct ShiftTail {
    InfiniteWord tail;
    std::size_t offset = 0;
};

// omega = u * tail with |u| = offset and tail purely periodic. Throws
// std::domain_error for generated words.
ShiftTail shift_tail_normalize(const InfiniteWord& omega);

// Longest s <= |v| such that the last s letters of v agree with the last s
// letters of the left-infinite word ... v0 v0. Throws std::domain_error
// unless omega is purely periodic.
std::size_t reverse_suffix_match(const FiniteWord& v, const InfiniteWord& omega);

}  // namespace ncshift
