#include "gebra/eval.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "gebra/errors.hpp"

namespace gebra {

namespace {

const RatFunc& want_scalar(const Value& v, const std::string& who) {
    if (const auto* s = std::get_if<RatFunc>(&v)) return *s;
    throw TypeMismatch(who + " needs a scalar argument");
}

const Multivector& want_mv(const Value& v, const std::string& who) {
    if (const auto* m = std::get_if<Multivector>(&v)) return *m;
    throw TypeMismatch(who + " needs an algebra-element argument");
}

const TensorPoly& want_tensor(const Value& v, const std::string& who) {
    if (const auto* t = std::get_if<TensorPoly>(&v)) return *t;
    throw TypeMismatch(who + " needs a tensor argument");
}

// slot and grade arguments must appear literally in the source
long int_literal(const Expr& e, const std::string& who) {
    if (e.kind != Expr::Kind::Number || !is_integer(e.value))
        throw TypeMismatch(who + " needs an integer literal argument");
    if (!e.value.get_num().fits_slong_p())
        throw TypeMismatch(who + " argument out of range");
    return e.value.get_num().get_si();
}

void want_arity(const std::string& who, const std::vector<Expr>& args, std::size_t n) {
    if (args.size() != n) throw ArityError(who, args.size());
}

void reject_tag(const Expr& e) {
    if (!e.form_tag.empty())
        throw EvalError(e.name + " does not take a form tag");
}

const BilinearForm& pick_form(const Expr& e, const AlgebraContext& ctx) {
    if (e.form_tag.empty() || e.form_tag == "B") return ctx.product_form();
    if (e.form_tag == "BI") return ctx.coproduct_form();
    throw EvalError("unknown form tag [" + e.form_tag + "]; use [B] or [BI]");
}

Multivector eval_blade(const Expr& e, const AlgebraContext& ctx) {
    Multivector acc = Multivector::unit(ctx.dim());
    for (std::uint32_t g : e.gens) {
        if (g < 1 || g > ctx.dim())
            throw EvalError("generator e" + std::to_string(g) + " exceeds dimension " +
                            std::to_string(ctx.dim()));
        acc = wedge(acc, Multivector::generator(ctx.dim(), g));
    }
    return acc;
}

Value eval_call(const Expr& e, const AlgebraContext& ctx);

RatFunc power_impl(const RatFunc& base, long k) {
    RatFunc acc = RatFunc::one();
    for (long i = 0; i < k; ++i) acc *= base;
    return acc;
}

Value eval_node(const Expr& e, const AlgebraContext& ctx) {
    switch (e.kind) {
        case Expr::Kind::Number: return RatFunc(e.value);
        case Expr::Kind::Symbol: return RatFunc(e.sym);
        case Expr::Kind::Blade: return eval_blade(e, ctx);
        case Expr::Kind::Call: return eval_call(e, ctx);
        case Expr::Kind::Neg: {
            Value v = eval_node(e.args[0], ctx);
            if (auto* s = std::get_if<RatFunc>(&v)) return -*s;
            if (auto* m = std::get_if<Multivector>(&v)) return -*m;
            return -std::get<TensorPoly>(v);
        }
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            const bool add = e.kind == Expr::Kind::Add;
            Value a = eval_node(e.args[0], ctx), b = eval_node(e.args[1], ctx);
            if (a.index() != b.index())
                throw TypeMismatch(std::string("'") + (add ? "+" : "-") +
                                   "' needs operands of the same kind");
            if (auto* s = std::get_if<RatFunc>(&a)) {
                const RatFunc& t = std::get<RatFunc>(b);
                return add ? *s + t : *s - t;
            }
            if (auto* m = std::get_if<Multivector>(&a)) {
                const Multivector& t = std::get<Multivector>(b);
                return add ? *m + t : *m - t;
            }
            const TensorPoly& s = std::get<TensorPoly>(a);
            const TensorPoly& t = std::get<TensorPoly>(b);
            return add ? s + t : s - t;
        }
        case Expr::Kind::Mul: {
            Value a = eval_node(e.args[0], ctx), b = eval_node(e.args[1], ctx);
            if (auto* s = std::get_if<RatFunc>(&a)) {
                if (auto* t = std::get_if<RatFunc>(&b)) return *s * *t;
                if (auto* m = std::get_if<Multivector>(&b)) return m->scaled(*s);
                return std::get<TensorPoly>(b).scaled(*s);
            }
            if (auto* t = std::get_if<RatFunc>(&b)) {
                if (auto* m = std::get_if<Multivector>(&a)) return m->scaled(*t);
                return std::get<TensorPoly>(a).scaled(*t);
            }
            throw TypeMismatch("'*' multiplies by scalars; use wedge or cmul for products");
        }
        case Expr::Kind::Div: {
            Value a = eval_node(e.args[0], ctx), b = eval_node(e.args[1], ctx);
            const RatFunc& d = want_scalar(b, "'/'");
            if (auto* s = std::get_if<RatFunc>(&a)) return *s / d;
            if (d.is_zero()) throw DivisionByZero();
            if (auto* m = std::get_if<Multivector>(&a)) return m->scaled(d.inv());
            return std::get<TensorPoly>(a).scaled(d.inv());
        }
        case Expr::Kind::Pow: {
            Value a = eval_node(e.args[0], ctx);
            const RatFunc& base = want_scalar(a, "'^'");
            long k = int_literal(e.args[1], "'^'");
            if (k < 0) return power_impl(base.inv(), -k);
            return power_impl(base, k);
        }
    }
    throw EvalError("unreachable expression kind");
}

Value eval_call(const Expr& e, const AlgebraContext& ctx) {
    const std::string& f = e.name;
    const auto& args = e.args;

    auto arg = [&](std::size_t i) { return eval_node(args[i], ctx); };

    if (f == "wedge") {
        if (args.size() < 2) throw ArityError(f, args.size());
        reject_tag(e);
        Value v0 = arg(0);
        Multivector acc = want_mv(v0, f);
        for (std::size_t i = 1; i < args.size(); ++i) {
            Value vi = arg(i);
            acc = wedge(acc, want_mv(vi, f));
        }
        return acc;
    }
    if (f == "cmul" || f == "lc") {
        want_arity(f, args, 2);
        const BilinearForm& form = pick_form(e, ctx);
        Value a = arg(0), b = arg(1);
        if (f == "cmul") return cmul(want_mv(a, f), want_mv(b, f), form);
        return lc(want_mv(a, f), want_mv(b, f), form);
    }
    if (f == "ev") {
        want_arity(f, args, 2);
        reject_tag(e);
        Value a = arg(0), b = arg(1);
        return ev(want_mv(a, f), want_mv(b, f));
    }
    if (f == "gco" || f == "cco") {
        if (f == "gco")
            reject_tag(e);
        else if (!e.form_tag.empty())
            throw EvalError("cco always uses the context coproduct form");
        if (args.size() == 1) {
            Value a = arg(0);
            const Multivector& m = want_mv(a, f);
            return f == "gco" ? gco(m) : cco(m, ctx);
        }
        if (args.size() == 2) {
            Value a = arg(0);
            const TensorPoly& t = want_tensor(a, f);
            const long slot = int_literal(args[1], f + " slot");
            if (slot < 1) throw SlotOutOfRange(std::size_t(slot < 0 ? 0 : slot), t.rank());
            return f == "gco" ? gco_slot(t, std::size_t(slot))
                              : cco_slot(t, std::size_t(slot), ctx);
        }
        throw ArityError(f, args.size());
    }
    if (f == "gantipode" || f == "gradeinv" || f == "sp") {
        want_arity(f, args, 1);
        reject_tag(e);
        Value a = arg(0);
        const Multivector& m = want_mv(a, f);
        if (f == "gantipode") return gantipode(m);
        if (f == "gradeinv") return grade_involution(m);
        return counit(m);
    }
    if (f == "vectorpart") {
        want_arity(f, args, 2);
        reject_tag(e);
        Value a = arg(0);
        const long k = int_literal(args[1], f + " grade");
        return grade_project(want_mv(a, f), int(k));
    }
    if (f == "switch" || f == "gswitch") {
        want_arity(f, args, 2);
        reject_tag(e);
        Value a = arg(0);
        const TensorPoly& t = want_tensor(a, f);
        const long slot = int_literal(args[1], f + " slot");
        if (slot < 1) throw SlotOutOfRange(std::size_t(slot < 0 ? 0 : slot), t.rank());
        return f == "switch" ? tswitch(t, std::size_t(slot)) : gswitch(t, std::size_t(slot));
    }
    if (f == "t") {
        if (args.empty()) throw ArityError(f, 0);
        reject_tag(e);
        std::vector<Multivector> factors;
        factors.reserve(args.size());
        for (std::size_t i = 0; i < args.size(); ++i) {
            Value v = arg(i);
            if (auto* s = std::get_if<RatFunc>(&v))
                factors.push_back(Multivector::unit(ctx.dim()).scaled(*s));
            else
                factors.push_back(want_mv(v, f));
        }
        return tensor(factors);
    }
    throw EvalError("unknown operation: " + f);
}

}  // namespace

Value evaluate(const Expr& e, const AlgebraContext& ctx) { return eval_node(e, ctx); }

Value evaluate_str(const std::string& src, const AlgebraContext& ctx) {
    return evaluate(parse(src), ctx);
}

std::string value_str(const Value& v) {
    if (const auto* s = std::get_if<RatFunc>(&v)) return s->str();
    if (const auto* m = std::get_if<Multivector>(&v)) return m->str();
    return std::get<TensorPoly>(v).str();
}

std::string value_dsl(const Value& v) {
    if (const auto* s = std::get_if<RatFunc>(&v)) return s->str();
    if (const auto* m = std::get_if<Multivector>(&v)) return m->dsl();
    return std::get<TensorPoly>(v).dsl();
}

Value value_subst(const Value& v, const SubstMap& m) {
    if (const auto* s = std::get_if<RatFunc>(&v)) return subst(*s, m);
    if (const auto* u = std::get_if<Multivector>(&v)) return subst(*u, m);
    return subst(std::get<TensorPoly>(v), m);
}

}  // namespace gebra
