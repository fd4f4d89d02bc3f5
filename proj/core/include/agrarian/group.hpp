#pragma once

#include "agrarian/error.hpp"
#include "agrarian/matrix.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agrarian {

struct Letter {
    std::size_t gen = 0;
    int exp = 1;  // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word in the generators of a free group.
class Word {
public:
    Word() = default;
    // Reduces the letters; exponents must be +-1.
    explicit Word(std::vector<Letter> letters);
    static Word letter(std::size_t gen, int exp = 1);
    // gen^power, power any integer.
    static Word power_of(std::size_t gen, long power);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    // Largest generator index used plus one.
    std::size_t generator_bound() const;

    Word inverse() const;
    Word power(long k) const;
    friend Word operator*(const Word& a, const Word& b);
    long exponent_sum(std::size_t gen) const;
    // Replaces generator j by images[j].
    Word substitute(const std::vector<Word>& images) const;

    // Shortlex order.
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

    // "a b a^-1"; the empty word is "1".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<Letter> letters_;
};

// Finite presentation <names | relators>.
class Presentation {
public:
    Presentation() = default;
    // Throws ValidationError on duplicate or empty names or out-of-range relator letters.
    Presentation(std::vector<std::string> names, std::vector<Word> relators);

    std::size_t generator_count() const noexcept { return names_.size(); }
    std::size_t relator_count() const noexcept { return relators_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<Word>& relators() const noexcept { return relators_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    long deficiency() const { return long(names_.size()) - long(relators_.size()); }

    std::string to_string() const;

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Word> relators_;
};

// '<' names '|' relator (',' relator)* '>' with relator letters `x`, `x^-1` or `x^k`.
Presentation parse_presentation(std::string_view text);
// Whitespace-separated letters over the given names; "1" is the empty word.
// `offset` is added to error positions.
Word parse_word(std::string_view text, const std::vector<std::string>& names, std::size_t offset = 0);

// q: G -> Z^k, the free part of the abelianization.
struct AbelianizationMap {
    std::size_t rank = 0;
    std::vector<std::vector<long>> images;  // per generator, length rank
    std::vector<mpz_class> torsion;         // invariant factors > 1

    std::vector<long> image(const Word& w) const;
    // Image of a word substitution: new generator i maps to image(words[i]).
    AbelianizationMap transported(const std::vector<Word>& words) const;
};

AbelianizationMap abelianize(const Presentation& p);

// Integral character on the generators, validated to vanish on relators.
class Character {
public:
    Character() = default;
    // Throws ValidationError if the length is wrong or a relator has nonzero value.
    Character(const Presentation& p, std::vector<long> values);

    const std::vector<long>& values() const noexcept { return values_; }
    long value(const Word& w) const;
    long content() const;  // gcd of values, 0 for the zero character
    bool is_primitive() const { return content() == 1; }
    bool is_zero() const { return content() == 0; }
    // c with phi = c . q; throws ValidationError if phi does not factor through q.
    std::vector<long> coordinates(const AbelianizationMap& q) const;
    Character transported(const std::vector<Word>& words) const;
    Character scaled(long k) const;

    friend bool operator==(const Character&, const Character&) = default;

private:
    std::vector<long> values_;
};

// phi = c . q for a coordinate vector c.
Character character_from_coordinates(const Presentation& p, const AbelianizationMap& q, const std::vector<long>& c);

enum class NielsenKind { RightMultiply, LeftMultiply, Invert, Swap };

// RightMultiply: x_i -> x_i x_j^exp. LeftMultiply: x_i -> x_j^exp x_i.
// Invert: x_i -> x_i^-1. Swap: x_i <-> x_j.
struct NielsenMove {
    NielsenKind kind = NielsenKind::Swap;
    std::size_t i = 0;
    std::size_t j = 0;
    int exp = 1;

    std::string to_string() const;
    friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

// A presentation obtained by Nielsen moves, with the words relating old and new generators.
struct NielsenTransform {
    Presentation presentation;
    std::vector<NielsenMove> moves;
    std::vector<Word> new_in_old;
    std::vector<Word> old_in_new;

    explicit NielsenTransform(Presentation original);
    void apply(const NielsenMove& m);
};

struct AdaptedPresentation {
    NielsenTransform transform;
    AbelianizationMap q;          // transported: same Z^k coordinates as the original
    Character phi;                // transported
    std::vector<std::size_t> basis;  // generators whose q-images form a basis of Z^k
    std::size_t y = 0;            // phi(y) = 1, phi = 0 on all other generators
};

// True if some k generators map to a basis, the rest to 0, and exactly one generator
// has phi = 1 while phi vanishes on the others. Fills basis and y on success.
bool is_adapted(const AbelianizationMap& q, const Character& phi, std::vector<std::size_t>* basis = nullptr,
                std::size_t* y = nullptr);

// Throws ValidationError if phi is not primitive.
AdaptedPresentation nielsen_adapt(const Presentation& p, const AbelianizationMap& q, const Character& phi);

// Element of ZF: finite sum of integer multiples of reduced words.
class GroupRingElement {
public:
    GroupRingElement() = default;
    static GroupRingElement of(const Word& w, const mpz_class& c = 1);
    static GroupRingElement one() { return of(Word()); }

    const std::map<Word, mpz_class>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    mpz_class coefficient(const Word& w) const;
    // Image in Z under the augmentation g -> 1.
    mpz_class augmentation() const;

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    GroupRingElement operator-() const;
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    GroupRingElement substitute(const std::vector<Word>& images) const;
    std::size_t generator_bound() const;

    // "a b - 2 b^-1 + 1".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add(const Word& w, const mpz_class& c);
    std::map<Word, mpz_class> terms_;
};

// Sum of terms `[c] [*] word` joined by + or -; "1" is the identity.
GroupRingElement parse_group_ring_element(std::string_view text, const std::vector<std::string>& names,
                                          std::size_t offset = 0);

inline bool is_zero(const GroupRingElement& e) { return e.is_zero(); }
inline GroupRingElement zero_like(const GroupRingElement&) { return {}; }
inline GroupRingElement one_like(const GroupRingElement&) { return GroupRingElement::one(); }
inline std::size_t entry_size(const GroupRingElement& e) { return e.terms().size(); }

// Left Fox derivative: d(uv) = du + u dv, dx/dx = 1, dx^-1/dx = -x^-1.
GroupRingElement fox_derivative(const Word& w, std::size_t gen);
// Right derivative: d(uv) = d(u) v + d(v). Satisfies w - 1 = sum_i (x_i - 1) d_i(w).
GroupRingElement right_fox_derivative(const Word& w, std::size_t gen);
// Checked against the generator count of p; throws ValidationError on an unknown generator.
GroupRingElement fox_derivative(const Presentation& p, const Word& w, std::size_t gen);

// Boundary of the presentation 2-complex: rows are generators, columns relators,
// entries right Fox derivatives, so that (1 - x_1, ..., 1 - x_m) times it vanishes in ZG.
Matrix<GroupRingElement> fox_jacobian(const Presentation& p);
// The row (1 - x_1, ..., 1 - x_m).
Matrix<GroupRingElement> augmentation_row(const Presentation& p);

}  // namespace agrarian
