"""Formula layer: NNF operations, polarization, the two translations."""

from kcert.formulas import (
    All,
    And,
    AndNeg,
    AndPos,
    BVar,
    Box,
    DelayNeg,
    DelayPos,
    Dia,
    Eigen,
    Exists,
    FalseNeg,
    FoAll,
    FoAnd,
    FoAtom,
    FoEx,
    FoFalse,
    FoImp,
    FoNeg,
    FoOr,
    FoTrue,
    Labeled,
    NAtom,
    NegAtom,
    Or,
    OrNeg,
    OrPos,
    PAtom,
    PosAtom,
    REL,
    RelAtom,
    TruePos,
    W0,
    atom_names,
    connective_count,
    delay_if_negative,
    is_literal,
    is_positive,
    is_rel_literal,
    modal_depth,
    modal_size,
    negate_nnf,
    negate_polarized,
    open_binder,
    polarity,
    polarized_translation,
    render_fo,
    render_modal,
    render_polarized,
    standard_translation,
    strip_polarities,
    translate_labeled,
    translate_sequent,
)
from helpers import formulas_of_connectives, formulas_of_size

P = PosAtom("p")
Q = PosAtom("q")
NP = NegAtom("p")
NQ = NegAtom("q")


class TestNnf:
    def test_negate_atom(self):
        assert negate_nnf(P) == NP
        assert negate_nnf(NP) == P

    def test_negate_two_worlds_formula(self):
        # (dia~p | dia~q) & box(p&q) is the refutation root of its dual
        theorem = Or(And(Box(P), Box(Q)), Dia(Or(NP, NQ)))
        assert negate_nnf(theorem) == And(
            Or(Dia(NP), Dia(NQ)), Box(And(P, Q)))

    def test_negate_detailed_example_formula(self):
        theorem = Or(Or(Dia(NP), Box(Q)), Dia(And(P, NQ)))
        assert negate_nnf(theorem) == And(
            And(Box(P), Dia(NQ)), Box(Or(NP, Q)))

    def test_negate_involution_small(self):
        for c in range(3):
            for f in formulas_of_connectives(c):
                assert negate_nnf(negate_nnf(f)) == f

    def test_counting(self):
        f = Or(Or(Dia(NP), Box(Q)), Dia(And(P, NQ)))
        assert connective_count(f) == 6
        assert modal_size(f) == 10
        assert modal_depth(f) == 1
        assert modal_depth(Box(Dia(P))) == 2
        assert atom_names(f) == frozenset({"p", "q"})

    def test_size_vs_connectives(self):
        for n in range(1, 5):
            for f in formulas_of_size(n):
                assert modal_size(f) == n
                assert connective_count(f) < n


class TestPolarity:
    def test_table(self):
        assert polarity(PAtom(REL, (W0, Eigen(1)))) == "positive"
        assert polarity(DelayNeg(PAtom("p", (W0,)))) == "negative"
        assert polarity(All(PAtom("p", (BVar(0),)))) == "negative"
        assert polarity(TruePos()) == "positive"
        assert polarity(FalseNeg()) == "negative"

    def test_literals(self):
        assert is_literal(PAtom("p", (W0,)))
        assert is_literal(NAtom("p", (W0,)))
        assert not is_literal(DelayPos(PAtom("p", (W0,))))
        assert is_rel_literal(NAtom(REL, (W0, Eigen(2))))
        assert not is_rel_literal(NAtom("p", (W0,)))
        assert not is_rel_literal(PAtom(REL, (W0,)))

    def test_delay_if_negative(self):
        lit = PAtom("p", (W0,))
        neg_lit = NAtom("p", (W0,))
        disj = OrNeg(lit, neg_lit)
        ex = Exists(PAtom("p", (BVar(0),)))
        assert delay_if_negative(lit) == lit
        assert delay_if_negative(neg_lit) == neg_lit
        assert delay_if_negative(ex) == ex
        assert delay_if_negative(disj) == DelayPos(disj)

    def test_delayed_translation_always_positive_or_literal(self):
        # structural enumeration to depth 5
        for n in range(1, 6):
            for f in formulas_of_size(n):
                out = delay_if_negative(polarized_translation(f, W0))
                assert is_positive(out) or is_literal(out)


class TestNegatePolarized:
    def test_spec_pairs(self):
        a = PAtom("p", (W0,))
        b = NAtom("q", (W0,))
        assert negate_polarized(a) == NAtom("p", (W0,))
        assert negate_polarized(AndNeg(a, b)) == OrPos(NAtom("p", (W0,)),
                                                       PAtom("q", (W0,)))
        assert negate_polarized(DelayPos(a)) == DelayNeg(NAtom("p", (W0,)))
        assert negate_polarized(All(a)) == Exists(NAtom("p", (W0,)))
        assert negate_polarized(TruePos()) == FalseNeg()

    def test_involution(self):
        for c in range(3):
            for f in formulas_of_connectives(c):
                g = polarized_translation(f, W0)
                assert negate_polarized(negate_polarized(g)) == g

    def test_flips_polarity(self):
        for f in formulas_of_connectives(2):
            g = polarized_translation(f, W0)
            assert is_positive(g) != is_positive(negate_polarized(g))


class TestOpenBinder:
    def test_substitutes_outermost(self):
        body = OrNeg(NAtom(REL, (W0, BVar(0))), PAtom("q", (BVar(0),)))
        opened = open_binder(body, Eigen(1))
        assert opened == OrNeg(NAtom(REL, (W0, Eigen(1))),
                               PAtom("q", (Eigen(1),)))

    def test_leaves_inner_binders_alone(self):
        # all y. (R(w0, y) and all z. R(y, z)) opened at the outer level
        inner = All(PAtom(REL, (BVar(1), BVar(0))))
        body = AndNeg(PAtom(REL, (W0, BVar(0))), inner)
        opened = open_binder(body, Eigen(3))
        assert opened == AndNeg(PAtom(REL, (W0, Eigen(3))),
                                All(PAtom(REL, (Eigen(3), BVar(0)))))

    def test_decrements_escaping_variables(self):
        # a variable bound even further out slides down one slot
        body = PAtom(REL, (BVar(1), BVar(0)))
        assert open_binder(body, W0) == PAtom(REL, (BVar(0), W0))


class TestPolarizedTranslation:
    def test_atoms(self):
        assert polarized_translation(P, W0) == PAtom("p", (W0,))
        assert polarized_translation(NP, W0) == NAtom("p", (W0,))

    def test_box(self):
        assert polarized_translation(Box(Q), W0) == All(OrNeg(
            NAtom(REL, (W0, BVar(0))), PAtom("q", (BVar(0),))))

    def test_dia_of_conjunction(self):
        got = polarized_translation(Dia(And(P, NQ)), W0)
        body = AndNeg(PAtom("p", (BVar(0),)), NAtom("q", (BVar(0),)))
        assert got == Exists(AndPos(
            PAtom(REL, (W0, BVar(0))), DelayNeg(DelayPos(body))))

    def test_connectives_delay_decomposable_children(self):
        got = polarized_translation(Or(Or(P, Q), NP), W0)
        assert got == OrNeg(
            DelayPos(OrNeg(PAtom("p", (W0,)), PAtom("q", (W0,)))),
            NAtom("p", (W0,)))

    def test_nested_box_shifts_the_bound_world(self):
        got = polarized_translation(Box(Box(P)), W0)
        inner = All(OrNeg(NAtom(REL, (BVar(1), BVar(0))),
                          PAtom("p", (BVar(0),))))
        assert got == All(OrNeg(NAtom(REL, (W0, BVar(0))), DelayPos(inner)))

    def test_no_positive_disjunction_and_no_double_delay(self):
        def scan(f, under_delayneg=False):
            assert not isinstance(f, OrPos)
            if isinstance(f, DelayPos):
                scan(f.body)
            elif isinstance(f, DelayNeg):
                # the only stacking is the diamond's DelayNeg(DelayPos(...))
                if isinstance(f.body, DelayPos):
                    scan(f.body.body)
                else:
                    scan(f.body)
            elif isinstance(f, (AndNeg, OrNeg, AndPos)):
                scan(f.left)
                scan(f.right)
            elif isinstance(f, (All, Exists)):
                scan(f.body)

        for n in range(1, 6):
            for f in formulas_of_size(n):
                scan(polarized_translation(f, W0))


class TestLabeled:
    def test_labeled_formula(self):
        x = Eigen(1)
        assert translate_labeled(Labeled(x, P)) == PAtom("p", (x,))

    def test_rel_atom(self):
        x, y = Eigen(1), Eigen(2)
        assert translate_labeled(RelAtom(x, y)) == PAtom(REL, (x, y))

    def test_sequent_atoms(self):
        x = Eigen(1)
        got = translate_sequent([Labeled(x, P)], [Labeled(x, P)])
        assert got == (NAtom("p", (x,)), PAtom("p", (x,)))

    def test_sequent_rel_left(self):
        x, y = Eigen(1), Eigen(2)
        assert translate_sequent([RelAtom(x, y)], []) == (NAtom(REL, (x, y)),)

    def test_sequent_delays_decomposables(self):
        got = translate_sequent([], [Labeled(W0, Or(P, NP))])
        assert got == (DelayPos(OrNeg(PAtom("p", (W0,)),
                                      NAtom("p", (W0,)))),)


class TestStandardTranslation:
    def test_atom(self):
        assert standard_translation(P, W0) == FoAtom("p", (W0,))

    def test_box(self):
        assert standard_translation(Box(P), W0) == FoAll(FoImp(
            FoAtom(REL, (W0, BVar(0))), FoAtom("p", (BVar(0),))))

    def test_dia(self):
        assert standard_translation(Dia(NQ), W0) == FoEx(FoAnd(
            FoAtom(REL, (W0, BVar(0))), FoNeg(FoAtom("q", (BVar(0),)))))


class TestStripPolarities:
    def test_erases_delays(self):
        f = DelayPos(OrNeg(PAtom("p", (W0,)), NAtom("p", (W0,))))
        assert strip_polarities(f) == FoOr(FoAtom("p", (W0,)),
                                           FoNeg(FoAtom("p", (W0,))))

    def test_box_translation_strips_to_disjunctive_form(self):
        got = strip_polarities(polarized_translation(Box(P), W0))
        assert got == FoAll(FoOr(FoNeg(FoAtom(REL, (W0, BVar(0)))),
                                 FoAtom("p", (BVar(0),))))

    def test_true_false(self):
        assert strip_polarities(TruePos()) == FoTrue()
        assert strip_polarities(FalseNeg()) == FoFalse()


class TestRendering:
    def test_modal(self):
        f = Or(Or(Dia(NP), Box(Q)), Dia(And(P, NQ)))
        assert render_modal(f) == "((dia ~p | box q) | dia (p & ~q))"

    def test_polarized_box(self):
        got = render_polarized(polarized_translation(Box(P), W0))
        assert got == "(all y1. (~R(w0,y1) |- p(y1)))"

    def test_polarized_dia_uses_delays(self):
        got = render_polarized(polarized_translation(Dia(NP), W0))
        assert got == "(ex y1. (R(w0,y1) &+ d-(~p(y1))))"

    def test_fo(self):
        got = render_fo(standard_translation(Box(P), W0))
        assert got == "(all y1. (R(w0,y1) => p(y1)))"

    def test_nested_binder_names_are_distinct(self):
        got = render_fo(standard_translation(Box(Dia(P)), W0))
        assert got == "(all y1. (R(w0,y1) => (ex y2. (R(y1,y2) & p(y2)))))"
