"""Compilation of polynomials to closed combinator terms over a club's basis.

The pipeline mirrors the constructive completeness argument:

  1. usage analysis splits the input into a linear skeleton and a usage
     function u;
  2. the skeleton alone is compiled with B and I by repeatedly contracting
     the leftmost adjacent pair of occurrences;
  3. u is factored into club generators, and each generator g is lifted
     through the witness: precomposing with g corresponds to wrapping the
     term in B^(i-1) applied to C (transposition), K (face) or W
     (degeneracy);
  4. the finished term is verified by symbolic reduction against the input.

Step 3 is sound because [t]a then [.]g equals [t](g;a): folding the factor
chain in application order rebuilds exactly the usage function.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import comb, finord, poly
from .comb import CombTerm, FreeSym
from .errors import ArityZero, ClubViolation, IndexOutOfRange
from .finord import Club, FinFun, GenKind, Generator


def compile_bracketing(b: poly.Bracketing) -> CombTerm:
    """A closed B/I term computing the ordered linear polynomial of shape b.

    A single occurrence is I.  Otherwise the leftmost node whose children are
    both leaves covers occurrences i, i+1; contracting it to a leaf gives a
    shorter shape with witness a, and B^(i-1) B a computes the original.
    """
    if isinstance(b, poly.Leaf):
        return comb.I
    contracted, i = _contract_leftmost(b)
    inner = compile_bracketing(contracted)
    return comb.apply(comb.b_power(i - 1), [comb.B, inner])


def _contract_leftmost(b: poly.Node) -> tuple[poly.Bracketing, int]:
    """Replace the leftmost leaf-leaf node by a leaf; i is its first leaf's index."""

    def rec(node: poly.Node, base: int) -> tuple[poly.Bracketing, int] | None:
        left, right = node.left, node.right
        if isinstance(left, poly.Leaf) and isinstance(right, poly.Leaf):
            return poly.LEAF, base + 1
        if isinstance(left, poly.Node):
            got = rec(left, base)
            if got is not None:
                return poly.Node(got[0], right), got[1]
        if isinstance(right, poly.Node):
            got = rec(right, base + poly.length(left))
            if got is not None:
                return poly.Node(left, got[0]), got[1]
        return None

    got = rec(b, 0)
    assert got is not None, "every node with two or more leaves contains a leaf-leaf node"
    return got


def lift_transposition(a: CombTerm, n: int, i: int) -> CombTerm:
    """From a witness of f (arity n) to one of f o t(n,i): B^(i-1) C a."""
    if not 1 <= i < n:
        raise IndexOutOfRange(f"transposition index {i} outside 1..{n - 1}")
    return comb.apply(comb.b_power(i - 1), [comb.C, a])


def lift_face(a: CombTerm, n: int, i: int) -> CombTerm:
    """From a witness of f (arity n-1) to one of f o d(n,i): B^(i-1) K a.

    The new witness takes n arguments and discards the i-th.  For n = 1 the
    given witness would need arity 0, which no polynomial has.
    """
    if n == 1:
        raise ArityZero("cannot lift a face into a one-argument witness")
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"face index {i} outside 1..{n}")
    return comb.apply(comb.b_power(i - 1), [comb.K, a])


def lift_degeneracy(a: CombTerm, n: int, i: int) -> CombTerm:
    """From a witness of f (arity n+1) to one of f o s(n,i): B^(i-1) W a."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"degeneracy index {i} outside 1..{n}")
    return comb.apply(comb.b_power(i - 1), [comb.W, a])


@dataclass(frozen=True)
class CompileReport:
    """Everything the compiler decided and produced for one input.

    In constants mode, output is the closed witness already applied to the
    constant symbols, constants lists them in slot order, and verified refers
    to the constant-instantiated equation; otherwise verified means
    verify(output, input) at the fuel used.  steps counts the verification
    reduction; it is 0 when verification was skipped.
    """

    input: poly.Sequent
    club_used: Club
    usage: FinFun
    generator_chain: tuple[Generator, ...]
    output: CombTerm
    verified: bool
    steps: int
    constants: tuple[str, ...] = field(default=())


def _compile_core(
    s: poly.Sequent, club: Club | None
) -> tuple[Club, FinFun, tuple[Generator, ...], CombTerm]:
    dec = poly.usage(s)
    u = dec.usage
    minimal = finord.minimal_club(u)
    club_used = minimal if club is None else club
    if not finord.contains(club_used, u):
        raise ClubViolation(
            f"usage {finord.format_finfun(u)} lies outside {club_used.display}; "
            f"its minimal club is {minimal.display}",
            minimal=minimal,
        )
    chain = tuple(finord.factor(u, club_used))

    term = compile_bracketing(dec.skeleton)
    arity = u.dom
    for g in chain:
        if g.kind is GenKind.TRANSPOSITION:
            assert arity == g.n, "transposition must match the current arity"
            term = lift_transposition(term, g.n, g.i)
            arity = g.n
        elif g.kind is GenKind.DEGENERACY:
            assert arity == g.n + 1, "degeneracy lowers the arity by one"
            term = lift_degeneracy(term, g.n, g.i)
            arity = g.n
        else:
            assert arity == g.n - 1, "face raises the arity by one"
            term = lift_face(term, g.n, g.i)
            arity = g.n
    assert arity == s.context_size, "the folded chain must land on the full context"
    return club_used, u, chain, term


def compile(
    s: poly.Sequent,
    club: Club | None = None,
    verify: bool = True,
    fuel: int = comb.DEFAULT_FUEL,
) -> CompileReport:
    """Compile s over the given club (default: its minimal club).

    Raises ClubViolation when the usage function is not in the club, and
    ArityZero for an empty context (no valid polynomial has one, but inputs
    arriving through constants preprocessing can).
    """
    if s.context_size == 0:
        raise ArityZero("a polynomial with no variables cannot be compiled")
    club_used, u, chain, term = _compile_core(s, club)
    verified, steps = False, 0
    if verify:
        verified, steps = comb.verify_with_steps(term, s, fuel)
    return CompileReport(
        input=s,
        club_used=club_used,
        usage=u,
        generator_chain=chain,
        output=term,
        verified=verified,
        steps=steps,
    )


def compile_with_constants(
    s: poly.Sequent,
    constants: tuple[str, ...],
    club: Club | None = None,
    verify: bool = True,
    fuel: int = comb.DEFAULT_FUEL,
) -> CompileReport:
    """Compile a sequent whose first len(constants) slots are constant occurrences.

    The extended sequent (constants included as leading variables) is
    compiled as usual, so the club must contain the extended usage function.
    The witness is then applied to the constant symbols, leaving a term over
    the original variables only.  ArityZero signals that nothing but
    constants occurred.
    """
    n_vars = s.context_size - len(constants)
    assert n_vars >= 0, "more constants than context slots"
    if n_vars == 0:
        raise ArityZero("the term contains constants only; no variables remain")
    club_used, u, chain, witness = _compile_core(s, club)
    const_syms = [FreeSym(name) for name in constants]
    output = comb.apply(witness, const_syms)
    verified, steps = False, 0
    if verify:
        syms = comb.fresh_symbols(n_vars, comb.free_symbols(output))
        expected = comb.poly_image(s.term, const_syms + syms)
        verified, steps = comb.run_equation(output, list(syms), expected, fuel)
    return CompileReport(
        input=s,
        club_used=club_used,
        usage=u,
        generator_chain=chain,
        output=output,
        verified=verified,
        steps=steps,
        constants=tuple(constants),
    )
