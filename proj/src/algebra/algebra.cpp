#include <bvd/algebra.hpp>

#include <bit>
#include <cctype>
#include <sstream>

namespace bvd {

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw DomainError("not a rational: '" + text + "'");
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- AtomSet

AtomSet::AtomSet(std::size_t size, bool full)
    : size_(size), words_((size + 63) / 64, full ? ~uint64_t{0} : 0)
{
    trim();
}

void AtomSet::trim()
{
    if (size_ % 64 && !words_.empty())
        words_.back() &= (uint64_t{1} << (size_ % 64)) - 1;
}

void AtomSet::set(std::size_t i, bool v)
{
    uint64_t bit = uint64_t{1} << (i & 63);
    if (v)
        words_[i >> 6] |= bit;
    else
        words_[i >> 6] &= ~bit;
}

std::size_t AtomSet::count() const
{
    std::size_t n = 0;
    for (uint64_t w : words_)
        n += std::popcount(w);
    return n;
}

bool AtomSet::none() const
{
    for (uint64_t w : words_)
        if (w)
            return false;
    return true;
}

bool AtomSet::all() const { return count() == size_; }

AtomSet& AtomSet::operator&=(const AtomSet& o)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= o.words_[i];
    return *this;
}

AtomSet& AtomSet::operator|=(const AtomSet& o)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= o.words_[i];
    return *this;
}

AtomSet AtomSet::operator~() const
{
    AtomSet r = *this;
    for (uint64_t& w : r.words_)
        w = ~w;
    r.trim();
    return r;
}

bool AtomSet::subset_of(const AtomSet& o) const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i])
            return false;
    return true;
}

std::strong_ordering AtomSet::operator<=>(const AtomSet& o) const
{
    if (auto c = size_ <=> o.size_; c != 0)
        return c;
    for (std::size_t i = words_.size(); i-- > 0;)
        if (auto c = words_[i] <=> o.words_[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

std::size_t AtomSet::next(std::size_t i) const
{
    while (i < size_) {
        uint64_t w = words_[i >> 6] >> (i & 63);
        if (w)
            return i + std::countr_zero(w);
        i = (i | 63) + 1;
    }
    return size_;
}

std::vector<std::size_t> AtomSet::indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = first(); i < size_; i = next(i + 1))
        out.push_back(i);
    return out;
}

std::size_t AtomSet::hash() const
{
    std::size_t h = size_ * 0x9e3779b97f4a7c15ull;
    for (uint64_t w : words_)
        h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return h;
}

// ---------------------------------------------------------------- Algebra

struct Algebra::Impl {
    std::size_t atoms;
    std::vector<Rational> weights;
    bool measured = false;
    bool uniform = false;
};

Algebra Algebra::make(std::size_t atom_count, std::optional<std::vector<Rational>> weights)
{
    if (atom_count == 0)
        throw DomainError("atom_count must be at least 1");
    auto impl = std::make_shared<Impl>();
    impl->atoms = atom_count;
    if (weights) {
        if (weights->size() != atom_count)
            throw DomainError("expected " + std::to_string(atom_count) + " weights, got " +
                              std::to_string(weights->size()));
        Rational sum = 0;
        bool same = true;
        for (auto& w : *weights) {
            if (w <= 0)
                throw DomainError("non-positive weight " + to_string(w));
            sum += w;
            same = same && w == weights->front();
        }
        if (sum != 1)
            throw DomainError("weights sum to " + to_string(sum) + ", not 1");
        impl->measured = true;
        impl->uniform = same;
        if (same)
            impl->weights.assign(1, weights->front());
        else
            impl->weights = std::move(*weights);
    }
    return Algebra(std::move(impl));
}

Algebra Algebra::uniform(std::size_t atom_count)
{
    if (atom_count == 0)
        throw DomainError("atom_count must be at least 1");
    auto impl = std::make_shared<Impl>();
    impl->atoms = atom_count;
    impl->measured = true;
    impl->uniform = true;
    impl->weights.assign(1, Rational(1, atom_count));
    impl->weights[0].canonicalize();
    return Algebra(std::move(impl));
}

std::size_t Algebra::atom_count() const { return impl_->atoms; }
bool Algebra::has_measure() const { return impl_->measured; }
const std::vector<Rational>& Algebra::weights() const { return impl_->weights; }

AlgebraElement Algebra::top() const { return {*this, AtomSet(impl_->atoms, true)}; }
AlgebraElement Algebra::bottom() const { return {*this, AtomSet(impl_->atoms)}; }

AlgebraElement Algebra::atom(std::size_t i) const
{
    if (i >= impl_->atoms)
        throw DomainError("atom index " + std::to_string(i) + " out of range");
    AtomSet s(impl_->atoms);
    s.set(i);
    return {*this, std::move(s)};
}

AlgebraElement Algebra::element(AtomSet atoms) const { return {*this, std::move(atoms)}; }

AlgebraElement Algebra::element(std::initializer_list<std::size_t> atoms) const
{
    AtomSet s(impl_->atoms);
    for (auto i : atoms) {
        if (i >= impl_->atoms)
            throw DomainError("atom index " + std::to_string(i) + " out of range");
        s.set(i);
    }
    return {*this, std::move(s)};
}

std::vector<AlgebraElement> Algebra::all_elements() const
{
    if (impl_->atoms > 20)
        throw BudgetError("too many atoms to list all elements");
    std::vector<AlgebraElement> out;
    for (uint64_t m = 0; m < (uint64_t{1} << impl_->atoms); ++m) {
        AtomSet s(impl_->atoms);
        s.words()[0] = m;
        out.emplace_back(*this, std::move(s));
    }
    return out;
}

Rational Algebra::measure(const AtomSet& atoms) const
{
    if (!impl_->measured)
        throw DomainError("algebra has no measure");
    if (impl_->uniform)
        return impl_->weights[0] * Rational(atoms.count());
    Rational sum = 0;
    for (std::size_t i = atoms.first(); i < atoms.size(); i = atoms.next(i + 1))
        sum += impl_->weights[i];
    return sum;
}

// ---------------------------------------------------------------- elements

AlgebraElement::AlgebraElement(Algebra alg, AtomSet atoms)
    : alg_(std::move(alg)), atoms_(std::move(atoms))
{
    if (atoms_.size() != alg_.atom_count())
        throw DomainError("atom set size does not match algebra");
}

void AlgebraElement::same(const AlgebraElement& o) const
{
    if (alg_ != o.alg_)
        throw DomainError("operands belong to different algebras");
}

AlgebraElement AlgebraElement::operator&(const AlgebraElement& o) const
{
    same(o);
    return {alg_, atoms_ & o.atoms_};
}

AlgebraElement AlgebraElement::operator|(const AlgebraElement& o) const
{
    same(o);
    return {alg_, atoms_ | o.atoms_};
}

AlgebraElement AlgebraElement::operator~() const { return {alg_, ~atoms_}; }

bool AlgebraElement::operator<=(const AlgebraElement& o) const
{
    same(o);
    return atoms_.subset_of(o.atoms_);
}

bool AlgebraElement::operator==(const AlgebraElement& o) const
{
    return alg_ == o.alg_ && atoms_ == o.atoms_;
}

Rational AlgebraElement::measure() const { return alg_.measure(atoms_); }

std::string AlgebraElement::to_string() const
{
    if (is_top())
        return "top";
    if (is_bottom())
        return "bot";
    std::string s = "[";
    bool first = true;
    for (auto i : atoms_.indices()) {
        if (!first)
            s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "]";
}

AlgebraElement implies(const AlgebraElement& a, const AlgebraElement& b) { return ~a | b; }

AlgebraElement iff(const AlgebraElement& a, const AlgebraElement& b)
{
    return implies(a, b) & implies(b, a);
}

AlgebraElement big_meet(const Algebra& alg, std::span<const AlgebraElement> family)
{
    AlgebraElement r = alg.top();
    for (auto& e : family)
        r = r & e;
    return r;
}

AlgebraElement big_join(const Algebra& alg, std::span<const AlgebraElement> family)
{
    AlgebraElement r = alg.bottom();
    for (auto& e : family)
        r = r | e;
    return r;
}

AlgebraElement alg_eval(const Algebra& alg, AlgOp op, std::span<const AlgebraElement> args)
{
    auto arity = [&](std::size_t n) {
        if (args.size() != n)
            throw DomainError("operator expects " + std::to_string(n) + " arguments");
        for (auto& a : args)
            if (a.algebra() != alg)
                throw DomainError("operands belong to different algebras");
    };
    switch (op) {
    case AlgOp::Meet: arity(2); return args[0] & args[1];
    case AlgOp::Join: arity(2); return args[0] | args[1];
    case AlgOp::Not: arity(1); return ~args[0];
    case AlgOp::Implies: arity(2); return implies(args[0], args[1]);
    case AlgOp::Iff: arity(2); return iff(args[0], args[1]);
    case AlgOp::BigMeet: return big_meet(alg, args);
    case AlgOp::BigJoin: return big_join(alg, args);
    }
    throw DomainError("unknown operator");
}

AlgebraElement parse_element(const Algebra& alg, const std::string& text)
{
    if (text == "top")
        return alg.top();
    if (text == "bot")
        return alg.bottom();
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw DomainError("bad algebra element '" + text + "'");
    AtomSet s(alg.atom_count());
    std::stringstream in(text.substr(1, text.size() - 2));
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        unsigned long i = 0;
        try {
            i = std::stoul(tok, &used);
        } catch (const std::exception&) {
            throw DomainError("bad atom index '" + tok + "'");
        }
        if (used != tok.size() || i >= alg.atom_count())
            throw DomainError("bad atom index '" + tok + "'");
        s.set(i);
    }
    return alg.element(std::move(s));
}

Algebra parse_algebra(const std::string& text)
{
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    if (head.empty() || head.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad algebra spec '" + text + "'", 0);
    std::size_t n = std::stoul(head);
    if (colon == std::string::npos)
        return Algebra::make(n);
    std::string rest = text.substr(colon + 1);
    if (rest == "uniform")
        return Algebra::uniform(n);
    std::vector<Rational> w;
    std::stringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ','))
        w.push_back(parse_rational(tok));
    return Algebra::make(n, std::move(w));
}

} // namespace bvd
