#include <bvd/lambda.hpp>

namespace bvd {

namespace {

Term v(const char* n) { return Term::var(n); }
Term L(const char* x, Term b) { return Term::lam(x, std::move(b)); }
Term A(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }
Term A(Term f, Term a, Term b) { return A(A(std::move(f), std::move(a)), std::move(b)); }
Term A(Term f, Term a, Term b, Term c) { return A(A(std::move(f), std::move(a), std::move(b)), std::move(c)); }

} // namespace

Term church(Church kind, unsigned n)
{
    switch (kind) {
    case Church::Numeral: {
        Term body = v("x");
        for (unsigned i = 0; i < n; ++i)
            body = A(v("f"), body);
        return L("f", L("x", body));
    }
    case Church::True: return L("t", L("f", v("t")));
    case Church::False: return L("t", L("f", v("f")));
    case Church::If: return L("b", L("m", L("n", A(v("b"), v("m"), v("n")))));
    case Church::Succ: return L("n", L("f", L("x", A(v("f"), A(v("n"), v("f"), v("x"))))));
    case Church::Pred:
        return L("n", L("f", L("x", A(v("n"), L("g", L("h", A(v("h"), A(v("g"), v("f"))))),
                                      L("u", v("x")), L("u", v("u"))))));
    case Church::IsZero: return L("n", A(v("n"), L("x", church(Church::False)), church(Church::True)));
    case Church::Num: {
        if (n == 0)
            return church(Church::IsZero);
        Term z = church(Church::IsZero), p = church(Church::Pred);
        if (n == 1)
            return L("m", A(church(Church::If), A(z, v("m")), church(Church::False),
                            A(z, A(p, v("m")))));
        return L("m", A(church(Church::Num, n - 1), A(p, v("m"))));
    }
    }
    throw DomainError("unknown encoding");
}

} // namespace bvd
