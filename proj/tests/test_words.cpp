#include <doctest.h>

#include "ncshift/words.hpp"
#include "oracles.hpp"

using namespace ncshift;

namespace {

FiniteWord w(const char* digits) { return FiniteWord::from_digits(digits); }

std::vector<FiniteWord> words_up_to(std::size_t n, std::size_t max_len) {
    std::vector<FiniteWord> out;
    for (std::size_t len = 0; len <= max_len; ++len)
        for (auto& x : all_words(n, len)) out.push_back(std::move(x));
    return out;
}

}  // namespace

TEST_CASE("concat and power") {
    CHECK(concat(FiniteWord{}, w("12")) == w("12"));
    CHECK(concat(w("1"), w("2")) == w("12"));
    CHECK(concat(w("12"), w("12")) == w("1212"));
    CHECK(power(w("12"), 0).empty());
    CHECK(power(w("12"), 3) == w("121212"));
}

TEST_CASE("serialization") {
    CHECK(to_string(w("121")) == "121");
    CHECK(to_string(FiniteWord{}).empty());
    CHECK(to_string(FiniteWord{3, 11, 2}, 12) == "3,11,2");
    CHECK(parse_word("3,11,2", 12) == FiniteWord{3, 11, 2});
    CHECK(parse_word("", 12).empty());
    CHECK_THROWS_AS(parse_word("13", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1,13", 12), std::invalid_argument);
}

TEST_CASE("primitive root examples") {
    auto d = primitive_root(w("1212"));
    CHECK(d.root == w("12"));
    CHECK(d.exponent == 2);
    d = primitive_root(w("1"));
    CHECK(d.root == w("1"));
    CHECK(d.exponent == 1);
    d = primitive_root(w("121"));
    CHECK(d.root == w("121"));
    CHECK(d.exponent == 1);
    CHECK_THROWS_AS(primitive_root(FiniteWord{}), std::invalid_argument);
}

TEST_CASE("primitive root agrees with the divisor oracle for n <= 3, |w| <= 8") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t max_len = n == 3 ? 7 : 8;
        for (const auto& x : words_up_to(n, max_len)) {
            if (x.empty()) continue;
            const auto d = primitive_root(x);
            REQUIRE(power(d.root, d.exponent) == x);
            REQUIRE(d.root == oracle::primitive_root_by_divisors(x));
            CHECK(is_primitive(x) == (d.exponent == 1));
        }
    }
    for (const auto& x : words_up_to(2, 5)) {
        if (x.empty()) continue;
        for (std::size_t j = 1; j <= 4; ++j) REQUIRE(primitive_root(power(x, j)).root == primitive_root(x).root);
    }
}

TEST_CASE("power lemma") {
    CHECK(power_exponent(w("1212"), w("12")) == 2);
    CHECK(power_exponent(w("12"), w("12")) == 1);
    CHECK_FALSE(power_exponent(w("121"), w("12")).has_value());

    const auto report = check_power_lemma(2, 6, 3, 4);
    CHECK(report.passed());
    CHECK(report.instances > 0);
    CHECK(check_power_lemma(3, 4, 2, 3).passed());
}

TEST_CASE("letters and prefixes") {
    const auto two = InfiniteWord::periodic(w("2"));
    const auto onetwo = InfiniteWord::periodic(w("12"));
    CHECK(two.at(5) == 2);
    CHECK(onetwo.at(4) == 2);
    CHECK(InfiniteWord::eventually_periodic(w("1"), w("2")).at(1) == 1);
    CHECK(two.prefix(0).empty());
    CHECK(onetwo.prefix(3) == w("121"));
    CHECK(two.prefix(2) == w("22"));
}

TEST_CASE("builtin aperiodic words") {
    const auto tm = InfiniteWord::thue_morse();
    // t_m = parity of the binary digit sum of m - 1, on letters {1, 2}.
    CHECK(tm.prefix(16) == w("1221211221121221"));
    CHECK(tm.certified_aperiodic());

    // Fixed point of 1 -> 12, 2 -> 1.
    FiniteWord fib = w("1");
    while (fib.size() < 60) {
        FiniteWord next;
        for (Letter l : fib) {
            next.push_back(1);
            if (l == 1) next.push_back(2);
        }
        fib = next;
    }
    CHECK(InfiniteWord::fibonacci().prefix(60) == fib.slice(0, 60));
    CHECK(InfiniteWord::builtin("thue_morse").has_value());
    CHECK_FALSE(InfiniteWord::builtin("nope").has_value());
}

TEST_CASE("classify_infinite") {
    auto c = classify_infinite(InfiniteWord::eventually_periodic({}, w("12")));
    REQUIRE(std::holds_alternative<PeriodicWord>(c));
    CHECK(std::get<PeriodicWord>(c).v0 == w("12"));

    c = classify_infinite(InfiniteWord::eventually_periodic(w("1"), w("22")));
    REQUIRE(std::holds_alternative<EventuallyPeriodicWord>(c));
    CHECK(std::get<EventuallyPeriodicWord>(c).u == w("1"));
    CHECK(std::get<EventuallyPeriodicWord>(c).v0 == w("2"));

    c = classify_infinite(InfiniteWord::thue_morse());
    REQUIRE(std::holds_alternative<AperiodicWord>(c));
    CHECK(std::get<AperiodicWord>(c).certified);

    // Same letter stream, two presentations.
    const auto a = InfiniteWord::eventually_periodic(w("1"), w("21"));
    const auto b = InfiniteWord::eventually_periodic(w("12"), w("12"));
    CHECK(a.prefix(30) == b.prefix(30));
    CHECK(classify_infinite(a) == classify_infinite(b));
    CHECK(a.preperiod() == b.preperiod());
    CHECK(a.period() == b.period());
}

TEST_CASE("eventually periodic normal form keeps the letter stream") {
    for (const auto& pre : words_up_to(2, 3))
        for (const auto& per : words_up_to(2, 4)) {
            if (per.empty()) continue;
            const auto x = InfiniteWord::eventually_periodic(pre, per);
            FiniteWord expected = pre;
            while (expected.size() < 40) expected = concat(expected, per);
            REQUIRE(x.prefix(40) == expected.slice(0, 40));
            CHECK(is_primitive(x.period()));
            if (!x.preperiod().empty()) CHECK(x.preperiod().back() != x.period().back());
        }
}

TEST_CASE("shift_tail_normalize") {
    auto st = shift_tail_normalize(InfiniteWord::periodic(w("12")));
    CHECK(st.offset == 0);
    CHECK(st.tail.period() == w("12"));
    st = shift_tail_normalize(InfiniteWord::eventually_periodic(w("1"), w("2")));
    CHECK(st.offset == 1);
    CHECK(st.tail.is_purely_periodic());
    CHECK(st.tail.period() == w("2"));
    st = shift_tail_normalize(InfiniteWord::eventually_periodic(w("12"), w("12")));
    CHECK(st.offset == 0);
    CHECK_THROWS_AS(shift_tail_normalize(InfiniteWord::thue_morse()), std::domain_error);
}

TEST_CASE("reverse_suffix_match") {
    const auto two = InfiniteWord::periodic(w("2"));
    const auto onetwo = InfiniteWord::periodic(w("12"));
    CHECK(reverse_suffix_match(w("2"), onetwo) == 1);
    CHECK(reverse_suffix_match(w("12"), two) == 1);
    CHECK(reverse_suffix_match(w("21"), two) == 0);
    CHECK_THROWS_AS(reverse_suffix_match(w("1"), InfiniteWord::thue_morse()), std::domain_error);

    // Appending v0 extends the match by |v0| whatever the match was before.
    for (const auto& omega : {two, onetwo, InfiniteWord::periodic(w("112"))}) {
        const FiniteWord& v0 = omega.period();
        for (const auto& x : words_up_to(2, 6)) {
            const std::size_t before = reverse_suffix_match(x, omega);
            REQUIRE(reverse_suffix_match(concat(x, v0), omega) == before + v0.size());
            // Direct definition: longest suffix of x that is a suffix of v0^t.
            std::size_t direct = 0;
            const FiniteWord tail = power(v0, x.size() + 1);
            for (std::size_t s = 0; s <= x.size(); ++s)
                if (x.slice(x.size() - s, s) == tail.slice(tail.size() - s, s)) direct = s;
            REQUIRE(before == direct);
        }
    }
}
