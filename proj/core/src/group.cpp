#include "agrarian/group.hpp"

#include "agrarian/smith.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace agrarian {

// ---------------------------------------------------------------- words

Word::Word(std::vector<Letter> letters) {
    letters_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.exp != 1 && l.exp != -1) throw ValidationError("letter exponent must be +1 or -1");
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

Word Word::letter(std::size_t gen, int exp) { return Word({Letter{gen, exp}}); }

Word Word::power_of(std::size_t gen, long power) {
    std::vector<Letter> ls(std::size_t(std::labs(power)), Letter{gen, power < 0 ? -1 : 1});
    Word w;
    w.letters_ = std::move(ls);
    return w;
}

std::size_t Word::generator_bound() const {
    std::size_t b = 0;
    for (const Letter& l : letters_) b = std::max(b, l.gen + 1);
    return b;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
    return w;
}

Word Word::power(long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word out;
    for (long i = 0; i < std::labs(k); ++i) out = out * base;
    return out;
}

Word operator*(const Word& a, const Word& b) {
    std::size_t cancel = 0;
    while (cancel < a.letters_.size() && cancel < b.letters_.size()) {
        const Letter& x = a.letters_[a.letters_.size() - 1 - cancel];
        const Letter& y = b.letters_[cancel];
        if (x.gen != y.gen || x.exp != -y.exp) break;
        ++cancel;
    }
    Word w;
    w.letters_.reserve(a.letters_.size() + b.letters_.size() - 2 * cancel);
    w.letters_.insert(w.letters_.end(), a.letters_.begin(), a.letters_.end() - long(cancel));
    w.letters_.insert(w.letters_.end(), b.letters_.begin() + long(cancel), b.letters_.end());
    return w;
}

long Word::exponent_sum(std::size_t gen) const {
    long s = 0;
    for (const Letter& l : letters_)
        if (l.gen == gen) s += l.exp;
    return s;
}

Word Word::substitute(const std::vector<Word>& images) const {
    Word out;
    for (const Letter& l : letters_) {
        if (l.gen >= images.size()) throw ValidationError("substitution misses a generator");
        out = out * (l.exp > 0 ? images[l.gen] : images[l.gen].inverse());
    }
    return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
}

std::string Word::to_string(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const Letter& l : letters_) {
        if (!s.empty()) s += ' ';
        s += l.gen < names.size() ? names[l.gen] : "x" + std::to_string(l.gen);
        if (l.exp < 0) s += "^-1";
    }
    return s;
}

// ---------------------------------------------------------------- presentations

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s, std::size_t& lead) {
    lead = 0;
    while (lead < s.size() && space(s[lead])) ++lead;
    std::size_t end = s.size();
    while (end > lead && space(s[end - 1])) --end;
    return s.substr(lead, end - lead);
}

}  // namespace

Presentation::Presentation(std::vector<std::string> names, std::vector<Word> relators)
    : names_(std::move(names)), relators_(std::move(relators)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty() || !ident_start(n[0]) || !std::all_of(n.begin(), n.end(), ident_char))
            throw ValidationError("invalid generator name '" + n + "'");
        if (!seen.insert(n).second) throw ValidationError("duplicate generator '" + n + "'");
    }
    for (const auto& r : relators_)
        if (r.generator_bound() > names_.size()) throw ValidationError("relator uses an unknown generator");
}

std::optional<std::size_t> Presentation::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::string Presentation::to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
    s += " | ";
    for (std::size_t i = 0; i < relators_.size(); ++i) s += (i ? ", " : "") + relators_[i].to_string(names_);
    s += ">";
    return s;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names, std::size_t offset) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    bool any = false;
    while (true) {
        while (i < text.size() && (space(text[i]) || text[i] == '*')) ++i;
        if (i == text.size()) break;
        any = true;
        if (text[i] == '1' && (i + 1 == text.size() || space(text[i + 1]) || text[i + 1] == '*')) {
            ++i;
            continue;
        }
        if (!ident_start(text[i])) throw ParseError("expected a generator name", offset + i);
        std::size_t start = i;
        while (i < text.size() && ident_char(text[i])) ++i;
        std::string name(text.substr(start, i - start));
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw ParseError("unknown generator '" + name + "'", offset + start);
        std::size_t gen = std::size_t(it - names.begin());
        long power = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t ps = i;
            if (i < text.size() && text[i] == '-') ++i;
            std::size_t ds = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (ds == i) throw ParseError("expected an exponent", offset + ps);
            if (i - ds > 6) throw ParseError("exponent too large", offset + ds);
            power = std::stol(std::string(text.substr(ps, i - ps)));
        }
        if (i < text.size() && !space(text[i]) && text[i] != '*')
            throw ParseError("unexpected character", offset + i);
        for (long k = 0; k < std::labs(power); ++k) letters.push_back({gen, power < 0 ? -1 : 1});
    }
    if (!any) throw ParseError("empty word", offset);
    return Word(std::move(letters));
}

Presentation parse_presentation(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && space(text[i])) ++i;
    if (i == text.size() || text[i] != '<') throw ParseError("expected '<'", i);
    std::size_t bar = text.find('|', i);
    if (bar == std::string_view::npos) throw ParseError("expected '|'", text.size());
    std::size_t close = text.find('>', bar);
    if (close == std::string_view::npos) throw ParseError("expected '>'", text.size());
    for (std::size_t j = close + 1; j < text.size(); ++j)
        if (!space(text[j])) throw ParseError("trailing characters", j);

    std::vector<std::string> names;
    std::size_t pos = i + 1;
    std::string_view gens = text.substr(pos, bar - pos);
    if (gens.find_first_not_of(" \t\r\n") != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = gens.find(',', start);
            std::string_view piece = gens.substr(start, comma == std::string_view::npos ? gens.npos : comma - start);
            std::size_t lead;
            std::string_view name = trim(piece, lead);
            std::size_t at = pos + start + lead;
            if (name.empty()) throw ParseError("empty generator name", at);
            if (!ident_start(name[0])) throw ParseError("invalid generator name", at);
            for (std::size_t k = 0; k < name.size(); ++k)
                if (!ident_char(name[k])) throw ParseError("invalid generator name", at + k);
            if (std::find(names.begin(), names.end(), name) != names.end())
                throw ParseError("duplicate generator '" + std::string(name) + "'", at);
            names.emplace_back(name);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }

    std::vector<Word> relators;
    pos = bar + 1;
    std::string_view rels = text.substr(pos, close - pos);
    if (rels.find_first_not_of(" \t\r\n") != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = rels.find(',', start);
            std::string_view piece = rels.substr(start, comma == std::string_view::npos ? rels.npos : comma - start);
            relators.push_back(parse_word(piece, names, pos + start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return Presentation(std::move(names), std::move(relators));
}

// ---------------------------------------------------------------- abelianization

std::vector<long> AbelianizationMap::image(const Word& w) const {
    std::vector<long> v(rank, 0);
    for (const Letter& l : w.letters())
        for (std::size_t c = 0; c < rank; ++c) v[c] += l.exp * images.at(l.gen)[c];
    return v;
}

AbelianizationMap AbelianizationMap::transported(const std::vector<Word>& words) const {
    AbelianizationMap out;
    out.rank = rank;
    out.torsion = torsion;
    for (const Word& w : words) out.images.push_back(image(w));
    return out;
}

namespace {

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw DomainError("integer overflow in abelianization");
    return z.get_si();
}

// Row Hermite normal form of a k x n integer matrix by unimodular row operations.
void row_hermite(std::vector<std::vector<long>>& q) {
    const std::size_t k = q.size();
    if (k == 0) return;
    const std::size_t n = q[0].size();
    std::size_t p = 0;
    for (std::size_t c = 0; c < n && p < k; ++c) {
        while (true) {
            std::size_t best = k;
            for (std::size_t r = p; r < k; ++r)
                if (q[r][c] != 0 && (best == k || std::labs(q[r][c]) < std::labs(q[best][c]))) best = r;
            if (best == k) break;
            std::swap(q[p], q[best]);
            bool done = true;
            for (std::size_t r = p + 1; r < k; ++r) {
                if (q[r][c] == 0) continue;
                long f = q[r][c] / q[p][c];
                for (std::size_t j = 0; j < n; ++j) q[r][j] -= f * q[p][j];
                if (q[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (q[p][c] == 0) continue;
        if (q[p][c] < 0)
            for (auto& x : q[p]) x = -x;
        for (std::size_t r = 0; r < p; ++r) {
            long f = q[r][c] / q[p][c];
            if (q[r][c] - f * q[p][c] < 0) --f;
            for (std::size_t j = 0; j < n; ++j) q[r][j] -= f * q[p][j];
        }
        ++p;
    }
}

}  // namespace

AbelianizationMap abelianize(const Presentation& p) {
    const std::size_t n = p.generator_count();
    IntMatrix e(p.relator_count(), std::vector<mpz_class>(n, 0));
    for (std::size_t r = 0; r < p.relator_count(); ++r)
        for (std::size_t j = 0; j < n; ++j) e[r][j] = p.relators()[r].exponent_sum(j);
    SmithForm s = smith_normal_form(e, n);
    AbelianizationMap q;
    q.rank = n - s.rank;
    for (const auto& d : s.diagonal)
        if (d > 1) q.torsion.push_back(d);
    // Coordinates V^T x diagonalize the relation lattice; the free part is the tail.
    std::vector<std::vector<long>> rows(q.rank, std::vector<long>(n, 0));
    for (std::size_t c = 0; c < q.rank; ++c)
        for (std::size_t j = 0; j < n; ++j) rows[c][j] = to_long(s.v[j][s.rank + c]);
    row_hermite(rows);
    q.images.assign(n, std::vector<long>(q.rank, 0));
    for (std::size_t c = 0; c < q.rank; ++c)
        for (std::size_t j = 0; j < n; ++j) q.images[j][c] = rows[c][j];
    for (const auto& r : p.relators())
        for (long v : q.image(r))
            if (v != 0) throw CrossCheckFailure("abelianization does not kill a relator");
    return q;
}

// ---------------------------------------------------------------- characters

Character::Character(const Presentation& p, std::vector<long> values) : values_(std::move(values)) {
    if (values_.size() != p.generator_count()) throw ValidationError("character length differs from generator count");
    for (std::size_t r = 0; r < p.relator_count(); ++r)
        if (value(p.relators()[r]) != 0)
            throw ValidationError("character does not vanish on relator " + std::to_string(r + 1));
}

long Character::value(const Word& w) const {
    long s = 0;
    for (const Letter& l : w.letters()) s += l.exp * values_.at(l.gen);
    return s;
}

long Character::content() const {
    long g = 0;
    for (long v : values_) g = std::gcd(g, v);
    return g;
}

std::vector<long> Character::coordinates(const AbelianizationMap& q) const {
    const std::size_t k = q.rank, n = values_.size();
    if (q.images.size() != n) throw ValidationError("character and abelianization disagree on generators");
    // Solve sum_c x_c q_j[c] = phi_j over Q by elimination on the n x (k+1) system.
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(k + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t c = 0; c < k; ++c) a[j][c] = q.images[j][c];
        a[j][k] = values_[j];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < n; ++c) {
        std::size_t p = n;
        for (std::size_t i = r; i < n; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p == n) continue;
        std::swap(a[r], a[p]);
        mpq_class inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (std::size_t j = 0; j <= k; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (a[i][k] != 0) throw ValidationError("character does not factor through the abelianization");
    std::vector<long> x(k, 0);
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i][k].get_den() != 1) throw ValidationError("character is not integral on the free abelianization");
        x[pivot_col[i]] = to_long(a[i][k].get_num());
    }
    for (std::size_t j = 0; j < n; ++j) {
        long v = 0;
        for (std::size_t c = 0; c < k; ++c) v += x[c] * q.images[j][c];
        if (v != values_[j]) throw ValidationError("character does not factor through the abelianization");
    }
    return x;
}

Character Character::transported(const std::vector<Word>& words) const {
    Character out;
    for (const Word& w : words) out.values_.push_back(value(w));
    return out;
}

Character Character::scaled(long k) const {
    Character out = *this;
    for (auto& v : out.values_) v *= k;
    return out;
}

Character character_from_coordinates(const Presentation& p, const AbelianizationMap& q, const std::vector<long>& c) {
    if (c.size() != q.rank) throw ValidationError("coordinate vector has wrong length");
    std::vector<long> vals(p.generator_count(), 0);
    for (std::size_t j = 0; j < vals.size(); ++j)
        for (std::size_t i = 0; i < q.rank; ++i) vals[j] += c[i] * q.images[j][i];
    return Character(p, std::move(vals));
}

// ---------------------------------------------------------------- Nielsen moves

std::string NielsenMove::to_string() const {
    auto g = [](std::size_t k) { return "x" + std::to_string(k); };
    switch (kind) {
        case NielsenKind::RightMultiply: return g(i) + " -> " + g(i) + " " + g(j) + "^" + std::to_string(exp);
        case NielsenKind::LeftMultiply: return g(i) + " -> " + g(j) + "^" + std::to_string(exp) + " " + g(i);
        case NielsenKind::Invert: return g(i) + " -> " + g(i) + "^-1";
        case NielsenKind::Swap: return g(i) + " <-> " + g(j);
    }
    return {};
}

NielsenTransform::NielsenTransform(Presentation original) : presentation(std::move(original)) {
    for (std::size_t i = 0; i < presentation.generator_count(); ++i) {
        new_in_old.push_back(Word::letter(i));
        old_in_new.push_back(Word::letter(i));
    }
}

void NielsenTransform::apply(const NielsenMove& m) {
    const std::size_t n = presentation.generator_count();
    if (m.i >= n || (m.kind != NielsenKind::Invert && m.j >= n)) throw ValidationError("Nielsen move out of range");
    if ((m.kind == NielsenKind::RightMultiply || m.kind == NielsenKind::LeftMultiply) && (m.i == m.j || m.exp == 0))
        throw ValidationError("degenerate Nielsen move");
    // back[g] expresses the current generator g in the new generators.
    std::vector<Word> back;
    for (std::size_t g = 0; g < n; ++g) back.push_back(Word::letter(g));
    std::vector<std::string> names = presentation.names();
    switch (m.kind) {
        case NielsenKind::RightMultiply:
            back[m.i] = Word::letter(m.i) * Word::power_of(m.j, -m.exp);
            new_in_old[m.i] = new_in_old[m.i] * new_in_old[m.j].power(m.exp);
            break;
        case NielsenKind::LeftMultiply:
            back[m.i] = Word::power_of(m.j, -m.exp) * Word::letter(m.i);
            new_in_old[m.i] = new_in_old[m.j].power(m.exp) * new_in_old[m.i];
            break;
        case NielsenKind::Invert:
            back[m.i] = Word::letter(m.i, -1);
            new_in_old[m.i] = new_in_old[m.i].inverse();
            break;
        case NielsenKind::Swap:
            std::swap(back[m.i], back[m.j]);
            std::swap(new_in_old[m.i], new_in_old[m.j]);
            std::swap(names[m.i], names[m.j]);
            break;
    }
    std::vector<Word> rels;
    for (const Word& r : presentation.relators()) rels.push_back(r.substitute(back));
    for (Word& w : old_in_new) w = w.substitute(back);
    presentation = Presentation(std::move(names), std::move(rels));
    moves.push_back(m);
}

bool is_adapted(const AbelianizationMap& q, const Character& phi, std::vector<std::size_t>* basis, std::size_t* y) {
    const std::size_t n = q.images.size();
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < n; ++j)
        if (std::any_of(q.images[j].begin(), q.images[j].end(), [](long v) { return v != 0; })) nz.push_back(j);
    if (nz.size() != q.rank) return false;
    Matrix<Gaussian> b(q.rank, q.rank, Gaussian());
    for (std::size_t r = 0; r < q.rank; ++r)
        for (std::size_t c = 0; c < q.rank; ++c) b(r, c) = Gaussian(q.images[nz[c]][r]);
    Gaussian d = det_commutative(b);
    if (d != Gaussian(1) && d != Gaussian(-1)) return false;
    std::optional<std::size_t> one;
    for (std::size_t j = 0; j < n; ++j) {
        long v = phi.values().at(j);
        if (v == 0) continue;
        if (v != 1 || one) return false;
        one = j;
    }
    if (!one) return false;
    if (basis) *basis = nz;
    if (y) *y = *one;
    return true;
}

AdaptedPresentation nielsen_adapt(const Presentation& p, const AbelianizationMap& q, const Character& phi) {
    if (phi.values().size() != p.generator_count()) throw ValidationError("character length differs from generator count");
    if (!phi.is_primitive()) throw ValidationError("character is not primitive");
    phi.coordinates(q);  // throws unless phi factors through q
    AdaptedPresentation out{NielsenTransform(p), q, phi, {}, 0};
    if (is_adapted(q, phi, &out.basis, &out.y)) return out;

    const std::size_t n = p.generator_count(), k = q.rank;
    // cols[j] = (q-image of generator j, phi-value); Nielsen moves act as column operations.
    std::vector<std::vector<long>> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        cols[j] = q.images[j];
        cols[j].push_back(phi.values()[j]);
    }
    auto move = [&](const NielsenMove& m) {
        out.transform.apply(m);
        switch (m.kind) {
            case NielsenKind::RightMultiply:
            case NielsenKind::LeftMultiply:
                for (std::size_t r = 0; r <= k; ++r) cols[m.i][r] += m.exp * cols[m.j][r];
                break;
            case NielsenKind::Invert:
                for (auto& v : cols[m.i]) v = -v;
                break;
            case NielsenKind::Swap: std::swap(cols[m.i], cols[m.j]); break;
        }
    };
    // Euclid on entry `row` over columns [from, to).
    auto euclid = [&](std::size_t row, std::size_t from, std::size_t to) {
        while (true) {
            std::size_t best = to;
            for (std::size_t c = from; c < to; ++c)
                if (cols[c][row] != 0 && (best == to || std::labs(cols[c][row]) < std::labs(cols[best][row]))) best = c;
            if (best == to) throw CrossCheckFailure("abelianization image is not surjective");
            if (best != from) move({NielsenKind::Swap, from, best, 1});
            bool done = true;
            for (std::size_t c = from + 1; c < to; ++c) {
                if (cols[c][row] == 0) continue;
                long f = cols[c][row] / cols[from][row];
                move({NielsenKind::RightMultiply, c, from, int(-f)});
                if (cols[c][row] != 0) done = false;
            }
            if (done) break;
        }
    };
    for (std::size_t r = 0; r < k; ++r) euclid(r, r, n);
    euclid(k, 0, k);
    if (cols[0][k] < 0) move({NielsenKind::Invert, 0, 0, 1});

    out.q = q.transported(out.transform.new_in_old);
    out.phi = phi.transported(out.transform.new_in_old);
    if (!is_adapted(out.q, out.phi, &out.basis, &out.y)) throw CrossCheckFailure("Nielsen adaptation failed");
    return out;
}

// ---------------------------------------------------------------- group ring

GroupRingElement GroupRingElement::of(const Word& w, const mpz_class& c) {
    GroupRingElement e;
    e.add(w, c);
    return e;
}

void GroupRingElement::add(const Word& w, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class GroupRingElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class GroupRingElement::augmentation() const {
    mpz_class s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) out.add(u * v, c * d);
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

GroupRingElement GroupRingElement::substitute(const std::vector<Word>& images) const {
    GroupRingElement out;
    for (const auto& [w, c] : terms_) out.add(w.substitute(images), c);
    return out;
}

std::size_t GroupRingElement::generator_bound() const {
    std::size_t b = 0;
    for (const auto& [w, c] : terms_) b = std::max(b, w.generator_bound());
    return b;
}

std::string GroupRingElement::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        mpz_class a = abs(c);
        if (first) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        first = false;
        if (w.empty()) s += a.get_str();
        else if (a == 1) s += w.to_string(names);
        else s += a.get_str() + " " + w.to_string(names);
    }
    return s;
}

GroupRingElement parse_group_ring_element(std::string_view text, const std::vector<std::string>& names,
                                          std::size_t offset) {
    GroupRingElement out;
    std::size_t i = 0;
    bool first = true;
    while (true) {
        while (i < text.size() && space(text[i])) ++i;
        if (i == text.size()) {
            if (first) throw ParseError("empty group ring element", offset + i);
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            while (i < text.size() && space(text[i])) ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", offset + i);
        }
        first = false;
        mpz_class coeff = 1;
        std::size_t ds = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        bool has_coeff = i > ds;
        if (has_coeff) coeff = mpz_class(std::string(text.substr(ds, i - ds)));
        // the word runs until the next top-level sign (a '-' after '^' belongs to an exponent)
        std::size_t ws = i;
        while (i < text.size()) {
            if ((text[i] == '+' || text[i] == '-') && !(i > 0 && text[i - 1] == '^')) break;
            ++i;
        }
        std::string_view word_text = text.substr(ws, i - ws);
        Word w;
        if (word_text.find_first_not_of(" \t\r\n*") != std::string_view::npos)
            w = parse_word(word_text, names, offset + ws);
        else if (!has_coeff)
            throw ParseError("expected a term", offset + ws);
        out += GroupRingElement::of(w, sign * coeff);
    }
    return out;
}

// ---------------------------------------------------------------- Fox calculus

GroupRingElement fox_derivative(const Word& w, std::size_t gen) {
    GroupRingElement out;
    const auto& ls = w.letters();
    for (std::size_t p = 0; p < ls.size(); ++p) {
        if (ls[p].gen != gen) continue;
        if (ls[p].exp > 0)
            out += GroupRingElement::of(Word({ls.begin(), ls.begin() + long(p)}));
        else
            out -= GroupRingElement::of(Word({ls.begin(), ls.begin() + long(p) + 1}));
    }
    return out;
}

GroupRingElement right_fox_derivative(const Word& w, std::size_t gen) {
    GroupRingElement out;
    const auto& ls = w.letters();
    for (std::size_t p = 0; p < ls.size(); ++p) {
        if (ls[p].gen != gen) continue;
        if (ls[p].exp > 0)
            out += GroupRingElement::of(Word({ls.begin() + long(p) + 1, ls.end()}));
        else
            out -= GroupRingElement::of(Word({ls.begin() + long(p), ls.end()}));
    }
    return out;
}

GroupRingElement fox_derivative(const Presentation& p, const Word& w, std::size_t gen) {
    if (gen >= p.generator_count() || w.generator_bound() > p.generator_count())
        throw ValidationError("Fox derivative with respect to an unknown generator");
    return fox_derivative(w, gen);
}

Matrix<GroupRingElement> fox_jacobian(const Presentation& p) {
    Matrix<GroupRingElement> m(p.generator_count(), p.relator_count(), GroupRingElement());
    for (std::size_t i = 0; i < p.generator_count(); ++i)
        for (std::size_t j = 0; j < p.relator_count(); ++j) m(i, j) = right_fox_derivative(p.relators()[j], i);
    return m;
}

Matrix<GroupRingElement> augmentation_row(const Presentation& p) {
    Matrix<GroupRingElement> m(1, p.generator_count(), GroupRingElement());
    for (std::size_t i = 0; i < p.generator_count(); ++i)
        m(0, i) = GroupRingElement::one() - GroupRingElement::of(Word::letter(i));
    return m;
}

}  // namespace agrarian
