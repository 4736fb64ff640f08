"""Globalization of partial module-algebra and comodule-algebra structures.

A partial bimodule structure on A embeds into a global one: inside the
convolution algebra Hom(H⊗H, A), send a to the functional k⊗k' ↦ k⇀a↼k' and
take the span of its translates under both operator families.  That span is
an algebra on which both families act globally, and the embedding turns the
partial products into honest ones.  The dual picture embeds a partial
bicomodule structure into the three-fold tensor H⊗A⊗H.  This module builds
both constructions, certifies the defining conditions exhaustively, compares
arbitrary candidates against the standard one, and measures how far a
candidate is from minimal.

A candidate globalization is any object carrying `algebra` (an AlgebraData,
possibly without unit), `theta` (matrix of the embedding of A into it),
`left_ops` / `right_ops` (one square matrix per basis element of the acting
Hopf algebra), and `coeff` (the coefficient algebra A).  The standard
constructions return richer objects that also qualify as candidates.
"""

from .algebras import (AlgebraData, algebra_check, dict_acc, dict_of_vec,
                       dual_hopf, hom_hh_a, mul_dicts, t3_mul, tensor_hah,
                       vec_of_dict)
from .actions import check_bimodule, same_algebra, same_hopf
from .coactions import check_bicomodule
from .linalg import (Subspace, Tensor3, closure_fixpoint, mat_apply,
                     nullspace, rref, solve, subspace_span, unit_vec, zeros)


def _col_dicts(op):
    """Columns of a dense matrix as sparse dicts (column j = image of e_j)."""
    cols = [dict() for _ in op[0]] if op else []
    for i, row in enumerate(op):
        for j, c in enumerate(row):
            if c:
                cols[j][i] = c
    return cols


def _apply_cols(cols, d):
    """Apply a matrix given by column dicts to a sparse vector dict."""
    out = {}
    for j, c in d.items():
        for i, e in cols[j].items():
            dict_acc(out, i, c * e)
    return out


def _combine_dict(cols, d, n, field):
    """Dense linear combination sum_j d[j] * cols[j] of dense columns."""
    out = zeros(field, n)
    for j, c in d.items():
        col = cols[j]
        for i in range(n):
            if col[i]:
                out[i] = out[i] + c * col[i]
    return out


# ---------------------------------------------------------------------------
# certificates and candidate records

class GlobalizationCertificate:
    """Outcome of verify_globalization.

    condition1_ok — every product of two translated embedded elements equals
    the embedded partial product; condition2_ok — the operator translates of
    the embedded algebra span the whole candidate; lemaco_ok — four product
    identities that follow from the conditions (the general product rule and
    absorption of the embedded unit on the left, right, and both sides),
    each verified on every basis tuple.  `witnesses` maps a failed check to
    the first offending tuple of basis labels.
    """

    def __init__(self, condition1_ok, condition2_ok, lemaco_ok, witnesses=None):
        self.condition1_ok = condition1_ok
        self.condition2_ok = condition2_ok
        self.lemaco_ok = tuple(lemaco_ok)
        self.witnesses = dict(witnesses or {})

    @property
    def ok(self):
        return self.condition1_ok and self.condition2_ok and all(self.lemaco_ok)

    @property
    def inconsistent(self):
        """Both conditions hold yet a derived identity fails; impossible for
        a sound construction, so True flags an internal contradiction."""
        return (self.condition1_ok and self.condition2_ok
                and not all(self.lemaco_ok))

    def lines(self):
        def tag(ok, key):
            if ok:
                return "ok"
            return "FAIL (witness %r)" % (self.witnesses.get(key),)

        labels = ("general product rule", "left absorption",
                  "right absorption", "two-sided absorption")
        out = ["condition 1, embedded products: %s" % tag(self.condition1_ok, "condition1"),
               "condition 2, translates span the candidate: %s" % tag(self.condition2_ok, "condition2")]
        for i, lab in enumerate(labels):
            out.append("derived identity %d, %s: %s"
                       % (i + 1, lab, tag(self.lemaco_ok[i], "lemaco%d" % (i + 1))))
        if self.inconsistent:
            out.append("WARNING: conditions hold but a derived identity fails")
        return out

    def to_json(self):
        return {
            "condition1_ok": bool(self.condition1_ok),
            "condition2_ok": bool(self.condition2_ok),
            "lemaco_ok": [bool(x) for x in self.lemaco_ok],
            "witnesses": {k: [str(x) for x in v] for k, v in self.witnesses.items()},
            "ok": bool(self.ok),
        }

    def __repr__(self):
        return ("GlobalizationCertificate(condition1=%s, condition2=%s, lemaco=%s)"
                % (self.condition1_ok, self.condition2_ok, list(self.lemaco_ok)))


class GlobalizationCandidate:
    """A bare candidate record: algebra, embedding matrix, the two operator
    families, and the coefficient algebra.  Nothing is checked here; run
    verify_globalization."""

    def __init__(self, algebra, theta, left_ops, right_ops, coeff, name=""):
        self.algebra = algebra
        self.theta = theta
        self.left_ops = left_ops
        self.right_ops = right_ops
        self.coeff = coeff
        self.name = name or ("candidate over %s" % coeff.name)

    def __repr__(self):
        return "GlobalizationCandidate(%s, dim %d)" % (self.name, self.algebra.dim)


class BimoduleGlobalization:
    """Standard globalization of a partial bimodule structure.

    ambient    — the Hom(H⊗H, A) bundle (algebra, left_ops, right_ops)
    phi        — matrix of the embedding of A in ambient coordinates
    b_basis    — row-reduced span of the operator translates of the image
    algebra    — induced product on that span in span coordinates; the unit
                 is kept when the ambient unit lies in the span
    left_ops, right_ops — operator families restricted to the span
    theta      — the embedding written in span coordinates
    certificate — verify_globalization outcome
    """

    def __init__(self, hopf, coeff, ambient, phi, b_basis, algebra,
                 left_ops, right_ops, theta, certificate=None):
        self.hopf = hopf
        self.coeff = coeff
        self.ambient = ambient
        self.phi = phi
        self.b_basis = b_basis
        self.algebra = algebra
        self.left_ops = left_ops
        self.right_ops = right_ops
        self.theta = theta
        self.certificate = certificate

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def induced_mul(self):
        return self.algebra.mul

    def to_json(self):
        show = self.hopf.field.show
        return {
            "ambient_dim": self.ambient.algebra.dim,
            "phi": [[show(c) for c in row] for row in self.phi],
            "b_basis": [[show(c) for c in row] for row in self.b_basis.rows],
            "mul": [[i, j, k, show(c)]
                    for (i, j, k), c in sorted(self.algebra.mul.entries.items())],
            "certificate": self.certificate.to_json() if self.certificate else None,
        }

    def __repr__(self):
        return ("BimoduleGlobalization(%s on %s, dim %d)"
                % (self.hopf.name, self.coeff.name, self.dim))


class BicomoduleGlobalization:
    """Standard globalization of a partial bicomodule structure.

    ambient    — the H⊗A⊗H bundle (algebra, coactions, dual operator families)
    theta      — matrix of the embedding of A in ambient coordinates
    b_basis    — the subspace generated from the image by the dual operators
                 and the product
    algebra    — induced product in span coordinates
    induced_rho, induced_lam — restrictions of the outer-leg coactions
    theta_b    — the embedding written in span coordinates
    certificate — dict of named boolean verification results
    """

    def __init__(self, hopf, coeff, ambient, theta, b_basis, algebra,
                 induced_rho, induced_lam, theta_b, certificate=None):
        self.hopf = hopf
        self.coeff = coeff
        self.ambient = ambient
        self.theta = theta
        self.b_basis = b_basis
        self.algebra = algebra
        self.induced_rho = induced_rho
        self.induced_lam = induced_lam
        self.theta_b = theta_b
        self.certificate = certificate or {}

    @property
    def dim(self):
        return self.algebra.dim

    def to_json(self):
        show = self.hopf.field.show
        return {
            "ambient_dim": self.ambient.algebra.dim,
            "phi": [[show(c) for c in row] for row in self.theta],
            "b_basis": [[show(c) for c in row] for row in self.b_basis.rows],
            "mul": [[i, j, k, show(c)]
                    for (i, j, k), c in sorted(self.algebra.mul.entries.items())],
            "certificate": {k: bool(v) for k, v in self.certificate.items()},
        }

    def __repr__(self):
        return ("BicomoduleGlobalization(%s on %s, dim %d)"
                % (self.hopf.name, self.coeff.name, self.dim))


# ---------------------------------------------------------------------------
# the standard bimodule globalization

def _restrict_operator(op, span, field, what):
    """Matrix of a span-invariant operator in span coordinates."""
    d = span.dim
    out = [[field.zero] * d for _ in range(d)]
    for j, row in enumerate(span.rows):
        w = mat_apply(op, row, field)
        cs = span.coords(w)
        if cs is None:
            raise AssertionError("%s leaves the span at basis %d" % (what, j))
        for i, c in enumerate(cs):
            out[i][j] = c
    return out


def _restrict_product(algebra, span):
    """Structure tensor of the ambient product restricted to a span."""
    d = span.dim
    mul = Tensor3((d, d, d))
    for i, ri in enumerate(span.rows):
        for j, rj in enumerate(span.rows):
            w = algebra.mulvec(ri, rj)
            cs = span.coords(w)
            if cs is None:
                raise AssertionError("span is not closed under the product "
                                     "at basis pair (%d, %d)" % (i, j))
            for k, c in enumerate(cs):
                if c:
                    mul.add(i, j, k, c)
    return mul


def standard_globalize_bimodule(b):
    """Globalize a certified partial bimodule structure on A inside the
    convolution algebra Hom(H⊗H, A).

    The embedding sends a to the functional k⊗k' ↦ k⇀a↼k'; the returned
    object carries the span of all operator translates of the image with its
    induced product, both restricted operator families, and a certificate
    from verify_globalization (construction fails if any check does).
    """
    rep = check_bimodule(b)
    if not rep.passed:
        law, idx, _, _ = rep.failures[0]
        raise ValueError("input bimodule fails %s at %s" % (law, idx))
    H, A = b.hopf, b.alg
    n, da = H.dim, A.dim
    f = H.field
    one = f.one
    amb = hom_hh_a(H, A)
    big = amb.algebra.dim

    # the embedding, one ambient column per basis element of A
    phi = [[f.zero] * da for _ in range(big)]
    for m in range(da):
        for i in range(n):
            w = b.left.apply({i: one}, {m: one})
            for j in range(n):
                val = b.right.apply({j: one}, w)
                for t, c in val.items():
                    phi[amb.index(i, j, t)][m] = c
    phi_cols = [[phi[r][m] for r in range(big)] for m in range(da)]

    # spanning translates in lexicographic (left, coefficient, right) order
    cols = []
    for h in range(n):
        lop = amb.left_ops[h]
        for m in range(da):
            for k in range(n):
                w = mat_apply(amb.right_ops[k], phi_cols[m], f)
                cols.append(mat_apply(lop, w, f))
    span = Subspace(big, f, cols)
    dB = span.dim

    mul = _restrict_product(amb.algebra, span)
    left_ops = [_restrict_operator(amb.left_ops[g], span, f,
                                   "left operator %s" % H.basis[g])
                for g in range(n)]
    right_ops = [_restrict_operator(amb.right_ops[g], span, f,
                                    "right operator %s" % H.basis[g])
                 for g in range(n)]

    theta = [[f.zero] * da for _ in range(dB)]
    for m in range(da):
        cs = span.coords(phi_cols[m])
        if cs is None:
            raise AssertionError("embedded element %s escapes the span" % A.basis[m])
        for i, c in enumerate(cs):
            theta[i][m] = c

    unit_b = span.coords(amb.algebra.unit) if span.contains(amb.algebra.unit) else None
    alg_b = AlgebraData(f, ["b%d" % i for i in range(dB)], mul, unit_b,
                        name="globalization of %s" % A.name)

    glob = BimoduleGlobalization(H, A, amb, phi, span, alg_b,
                                 left_ops, right_ops, theta)
    cert = verify_globalization(glob, b)
    if not cert.ok:
        raise AssertionError("standard globalization failed its own certificate: %r"
                             % (cert.witnesses,))
    glob.certificate = cert
    return glob


# ---------------------------------------------------------------------------
# verification

def _require_global_bimodule(algebra, hopf, left_cols, right_cols):
    """Raise unless the operator families make the (possibly non-unital)
    algebra a two-sided global module algebra: the Hopf unit acts as the
    identity, composition follows the Hopf product, the families commute,
    and products distribute through the comultiplication."""
    n = hopf.dim
    dB = algebra.dim
    f = hopf.field
    one = f.one
    pvB = algebra.mul.pair_view()
    pvH = hopf.mul.pair_view()
    iv = hopf.comul.in1_view()
    u_h = dict_of_vec(hopf.unit)
    empty = {}

    for x in range(dB):
        for cols, side in ((left_cols, "left"), (right_cols, "right")):
            acc = {}
            for i, c in u_h.items():
                for t, d in cols[i][x].items():
                    dict_acc(acc, t, c * d)
            if acc != {x: one}:
                raise ValueError("candidate fails the %s unit-operator law at basis %d"
                                 % (side, x))

    for g in range(n):
        for h in range(n):
            prod = pvH.get((g, h), empty)
            for x in range(dB):
                lhs = _apply_cols(left_cols[g], left_cols[h][x])
                rhs = {}
                for p, c in prod.items():
                    for t, d in left_cols[p][x].items():
                        dict_acc(rhs, t, c * d)
                if lhs != rhs:
                    raise ValueError("candidate fails left operator-composition "
                                     "at (%s, %s, basis %d)"
                                     % (hopf.basis[g], hopf.basis[h], x))
                lhs = _apply_cols(right_cols[h], right_cols[g][x])
                rhs = {}
                for p, c in prod.items():
                    for t, d in right_cols[p][x].items():
                        dict_acc(rhs, t, c * d)
                if lhs != rhs:
                    raise ValueError("candidate fails right operator-composition "
                                     "at (%s, %s, basis %d)"
                                     % (hopf.basis[g], hopf.basis[h], x))

    for g in range(n):
        for k in range(n):
            for x in range(dB):
                if _apply_cols(left_cols[g], right_cols[k][x]) != \
                        _apply_cols(right_cols[k], left_cols[g][x]):
                    raise ValueError("candidate operator families do not commute "
                                     "at (%s, %s, basis %d)"
                                     % (hopf.basis[g], hopf.basis[k], x))

    for i in range(n):
        di = iv.get(i, empty)
        for x in range(dB):
            for y in range(dB):
                mxy = pvB.get((x, y), empty)
                lhs = _apply_cols(left_cols[i], mxy)
                rhs = {}
                for (i1, i2), c in di.items():
                    term = mul_dicts(pvB, left_cols[i1][x], left_cols[i2][y])
                    for t, d in term.items():
                        dict_acc(rhs, t, c * d)
                if lhs != rhs:
                    raise ValueError("candidate fails the left operator product "
                                     "rule at (%s, %d, %d)" % (hopf.basis[i], x, y))
                lhs = _apply_cols(right_cols[i], mxy)
                rhs = {}
                for (i1, i2), c in di.items():
                    term = mul_dicts(pvB, right_cols[i1][x], right_cols[i2][y])
                    for t, d in term.items():
                        dict_acc(rhs, t, c * d)
                if lhs != rhs:
                    raise ValueError("candidate fails the right operator product "
                                     "rule at (%s, %d, %d)" % (hopf.basis[i], x, y))


def verify_globalization(candidate, b):
    """Certify a candidate globalization of the partial bimodule b.

    Structural faults raise: a non-associative candidate algebra, operator
    families that are not a two-sided global module-algebra structure, or a
    non-injective embedding.  Everything else is reported in the returned
    certificate: condition 1 compares (θ(a)◁h)(g▷θ(b)) with θ[(a↼h)(g⇀b)]
    on all basis tuples; condition 2 checks that the operator translates
    h▷θ(a)◁k span the whole candidate; the four derived identities are the
    general product rule
        (h▷θ(a)◁k)(h'▷θ(b)◁k') = Σ h₁▷θ[(a↼k·S(k'₁))(S(h₂)h'⇀b)]◁k'₂
    and absorption θ(1)(h▷θ(a)) = θ(h⇀a), (θ(a)◁h)θ(1) = θ(a↼h),
    θ(1)(h▷θ(a)◁k)θ(1) = θ(h⇀a↼k).
    """
    H, A = b.hopf, b.alg
    n, da = H.dim, A.dim
    f = H.field
    one = f.one
    Bp = candidate.algebra
    dB = Bp.dim

    rep = algebra_check(Bp)
    if not rep.passed:
        law, idx, _, _ = rep.failures[0]
        raise ValueError("candidate algebra fails %s at %s" % (law, idx))

    left_cols = [_col_dicts(op) for op in candidate.left_ops]
    right_cols = [_col_dicts(op) for op in candidate.right_ops]
    if len(left_cols) != n or len(right_cols) != n:
        raise ValueError("need one operator per Hopf basis element on each side")
    _require_global_bimodule(Bp, H, left_cols, right_cols)

    theta_d = [dict_of_vec([candidate.theta[r][m] for r in range(dB)])
               for m in range(da)]
    rank, _, _ = rref([vec_of_dict(d, dB, f) for d in theta_d], f)
    if rank != da:
        raise ValueError("embedding is not injective (rank %d of %d)" % (rank, da))

    def theta_of(dct):
        out = {}
        for m, c in dct.items():
            for i, d in theta_d[m].items():
                dict_acc(out, i, c * d)
        return out

    pvB = Bp.mul.pair_view()
    pvA = A.mul.pair_view()
    pvH = H.mul.pair_view()
    iv = H.comul.in1_view()
    s_cols = [dict_of_vec([H.antipode[r][j] for r in range(n)]) for j in range(n)]
    witnesses = {}

    # condition 1: products of one-sided translates
    cond1 = True
    for h in range(n):
        for m in range(da):
            lhs_left = _apply_cols(right_cols[h], theta_d[m])
            a_part = b.right.apply({h: one}, {m: one})
            for g in range(n):
                if not cond1:
                    break
                for mb in range(da):
                    lhs = mul_dicts(pvB, lhs_left, _apply_cols(left_cols[g], theta_d[mb]))
                    rhs = theta_of(mul_dicts(pvA, a_part,
                                             b.left.apply({g: one}, {mb: one})))
                    if lhs != rhs:
                        cond1 = False
                        witnesses["condition1"] = (H.basis[h], A.basis[m],
                                                   H.basis[g], A.basis[mb])
                        break
            if not cond1:
                break
        if not cond1:
            break

    # condition 2: the translates span everything
    translates = []
    for h in range(n):
        for m in range(da):
            for k in range(n):
                w = _apply_cols(left_cols[h], _apply_cols(right_cols[k], theta_d[m]))
                translates.append(vec_of_dict(w, dB, f))
    span = Subspace(dB, f, translates)
    cond2 = span.dim == dB
    if not cond2:
        witnesses["condition2"] = (span.dim, dB)

    # derived identity 1: the general product rule
    lem1 = True
    wit1 = None
    right_fac = {}
    for k in range(n):
        for w1 in range(n):
            kt = mul_dicts(pvH, {k: one}, s_cols[w1])
            for m in range(da):
                right_fac[(k, w1, m)] = b.right.apply(kt, {m: one})
    left_fac = {}
    for h2 in range(n):
        for hp in range(n):
            ht = mul_dicts(pvH, s_cols[h2], {hp: one})
            for m in range(da):
                left_fac[(h2, hp, m)] = b.left.apply(ht, {m: one})

    for h in range(n):
        dh = iv.get(h, {})
        for m in range(da):
            for k in range(n):
                if not lem1:
                    break
                x = _apply_cols(left_cols[h], _apply_cols(right_cols[k], theta_d[m]))
                for hp in range(n):
                    if not lem1:
                        break
                    for mb in range(da):
                        for kp in range(n):
                            y = _apply_cols(left_cols[hp],
                                            _apply_cols(right_cols[kp], theta_d[mb]))
                            lhs = mul_dicts(pvB, x, y)
                            rhs = {}
                            for (h1, h2), c1 in dh.items():
                                for (w1, w2), c2 in iv.get(kp, {}).items():
                                    prod = mul_dicts(pvA, right_fac[(k, w1, m)],
                                                     left_fac[(h2, hp, mb)])
                                    if not prod:
                                        continue
                                    term = _apply_cols(
                                        left_cols[h1],
                                        _apply_cols(right_cols[w2], theta_of(prod)))
                                    cc = c1 * c2
                                    for t, d in term.items():
                                        dict_acc(rhs, t, cc * d)
                            if lhs != rhs:
                                lem1 = False
                                wit1 = (H.basis[h], A.basis[m], H.basis[k],
                                        H.basis[hp], A.basis[mb], H.basis[kp])
                                break
            if not lem1:
                break
        if not lem1:
            break
    if wit1 is not None:
        witnesses["lemaco1"] = wit1

    # derived identities 2-4: absorption against the embedded unit
    theta1 = theta_of(dict_of_vec(A.unit))
    lem2 = lem3 = lem4 = True
    for h in range(n):
        for m in range(da):
            th = theta_d[m]
            if lem2:
                lhs = mul_dicts(pvB, theta1, _apply_cols(left_cols[h], th))
                rhs = theta_of(b.left.apply({h: one}, {m: one}))
                if lhs != rhs:
                    lem2 = False
                    witnesses["lemaco2"] = (H.basis[h], A.basis[m])
            if lem3:
                lhs = mul_dicts(pvB, _apply_cols(right_cols[h], th), theta1)
                rhs = theta_of(b.right.apply({h: one}, {m: one}))
                if lhs != rhs:
                    lem3 = False
                    witnesses["lemaco3"] = (H.basis[h], A.basis[m])
            if lem4:
                for k in range(n):
                    mid = _apply_cols(left_cols[h], _apply_cols(right_cols[k], th))
                    lhs = mul_dicts(pvB, theta1, mul_dicts(pvB, mid, theta1))
                    rhs = theta_of(b.right.apply({k: one},
                                                 b.left.apply({h: one}, {m: one})))
                    if lhs != rhs:
                        lem4 = False
                        witnesses["lemaco4"] = (H.basis[h], A.basis[m], H.basis[k])
                        break

    return GlobalizationCertificate(cond1, cond2, (lem1, lem2, lem3, lem4), witnesses)


# ---------------------------------------------------------------------------
# comparison with the standard globalization

def comparison_map(candidate, std):
    """Linear map sending each operator translate h▷θ(a)◁k of the candidate
    to the matching translate of the standard globalization.

    Well-definedness is verified by mapping every linear relation among the
    candidate translates to the standard side; the map is then checked to be
    an algebra map commuting with both operator families and matching the
    embeddings.  Returns (matrix, surjective, injective); surjectivity is
    asserted since the standard side is spanned by its translates.
    """
    H, A = std.hopf, std.coeff
    n, da = H.dim, A.dim
    f = H.field
    dC = candidate.algebra.dim
    dS = std.algebra.dim

    left_c = [_col_dicts(op) for op in candidate.left_ops]
    right_c = [_col_dicts(op) for op in candidate.right_ops]
    left_s = [_col_dicts(op) for op in std.left_ops]
    right_s = [_col_dicts(op) for op in std.right_ops]
    theta_c = [dict_of_vec([candidate.theta[r][m] for r in range(dC)])
               for m in range(da)]
    theta_s = [dict_of_vec([std.theta[r][m] for r in range(dS)])
               for m in range(da)]

    v_cols, w_cols = [], []
    for h in range(n):
        for m in range(da):
            for k in range(n):
                v = _apply_cols(left_c[h], _apply_cols(right_c[k], theta_c[m]))
                w = _apply_cols(left_s[h], _apply_cols(right_s[k], theta_s[m]))
                v_cols.append(vec_of_dict(v, dC, f))
                w_cols.append(vec_of_dict(w, dS, f))

    ncols = len(v_cols)
    v_rows = [[v_cols[j][i] for j in range(ncols)] for i in range(dC)]
    for z in nullspace(v_rows, f, ncols):
        image = zeros(f, dS)
        for j, c in enumerate(z):
            if c:
                col = w_cols[j]
                for i in range(dS):
                    if col[i]:
                        image[i] = image[i] + c * col[i]
        if any(image):
            raise ValueError("comparison map is ill-defined: the relation with "
                             "coefficients %r among the candidate translates "
                             "maps to a nonzero element" % (z,))

    phi_map = [[f.zero] * dC for _ in range(dS)]
    for i in range(dC):
        x = solve(v_cols, unit_vec(f, dC, i), f)
        if x is None:
            raise ValueError("candidate basis vector %d lies outside the span "
                             "of its operator translates" % i)
        for j, c in enumerate(x):
            if c:
                col = w_cols[j]
                for r in range(dS):
                    if col[r]:
                        phi_map[r][i] = phi_map[r][i] + c * col[r]

    rank, _, _ = rref([list(row) for row in phi_map], f)
    surjective = rank == dS
    assert surjective, "comparison map failed to reach the standard globalization"
    col_rank, _, _ = rref([[phi_map[r][i] for r in range(dS)]
                           for i in range(dC)], f)
    injective = col_rank == dC

    # the map must be multiplicative, operator-equivariant, and match the
    # embeddings; failures here would contradict well-definedness
    pmap = _col_dicts(phi_map)
    pvC = candidate.algebra.mul.pair_view()
    pvS = std.algebra.mul.pair_view()
    empty = {}
    for i in range(dC):
        for j in range(dC):
            lhs = _apply_cols(pmap, pvC.get((i, j), empty))
            rhs = mul_dicts(pvS, pmap[i], pmap[j])
            assert lhs == rhs, ("comparison map is not multiplicative at "
                                "basis pair (%d, %d)" % (i, j))
    for g in range(n):
        for i in range(dC):
            assert _apply_cols(pmap, left_c[g][i]) == \
                _apply_cols(left_s[g], pmap[i]), \
                "comparison map does not commute with left operator %s" % H.basis[g]
            assert _apply_cols(pmap, right_c[g][i]) == \
                _apply_cols(right_s[g], pmap[i]), \
                "comparison map does not commute with right operator %s" % H.basis[g]
    for m in range(da):
        assert _apply_cols(pmap, theta_c[m]) == theta_s[m], \
            "comparison map does not match the embeddings at basis %s" % A.basis[m]

    return phi_map, surjective, injective


# ---------------------------------------------------------------------------
# minimality

def maximal_degenerate_subbimodule(candidate):
    """Largest subspace M of the candidate with θ(1)·M·θ(1) = 0 that is
    invariant under both operator families; the candidate is minimal exactly
    when the result is zero.

    Computed as a decreasing fixpoint: start from the kernel of
    m ↦ θ(1)·m·θ(1) and repeatedly cut down to the members whose operator
    images all stay inside, until stable.
    """
    Bp = candidate.algebra
    A = candidate.coeff
    f = Bp.field
    dB = Bp.dim
    theta1 = {}
    for m, c in dict_of_vec(A.unit).items():
        for r in range(dB):
            if candidate.theta[r][m]:
                dict_acc(theta1, r, c * candidate.theta[r][m])
    pvB = Bp.mul.pair_view()

    squeeze = []
    for j in range(dB):
        w = mul_dicts(pvB, mul_dicts(pvB, theta1, {j: f.one}), theta1)
        squeeze.append(w)
    t_rows = [[squeeze[j].get(i, f.zero) for j in range(dB)] for i in range(dB)]
    if not any(any(row) for row in t_rows):
        cur = Subspace(dB, f, [unit_vec(f, dB, i) for i in range(dB)])
    else:
        cur = Subspace(dB, f, nullspace(t_rows, f, dB))

    ops = list(candidate.left_ops) + list(candidate.right_ops)
    for _ in range(dB + 1):
        cons = cur.constraint_matrix()
        if not cons:
            return cur
        stacked = [list(r) for r in cons]
        for op in ops:
            for crow in cons:
                stacked.append([sum((crow[t] * op[t][j] for t in range(dB)
                                     if crow[t]), start=f.zero)
                                for j in range(dB)])
        nxt = Subspace(dB, f, nullspace(stacked, f, dB))
        if nxt.dim == cur.dim:
            return nxt
        cur = nxt
    raise RuntimeError("degenerate-subspace fixpoint did not stabilize")


def minimalize(candidate, bimodule=None):
    """Quotient a candidate globalization by its maximal degenerate invariant
    subspace, which must be a two-sided ideal (it is, for any verified
    candidate).  The quotient carries the induced product, operator families,
    and embedding.  When the partial bimodule is supplied, the quotient is
    re-verified and must come out minimal."""
    M = maximal_degenerate_subbimodule(candidate)
    if M.dim == 0:
        return candidate
    Bp = candidate.algebra
    f = Bp.field
    dB = Bp.dim
    pvB = Bp.mul.pair_view()

    for r in M.rows:
        rd = dict_of_vec(r)
        for x in range(dB):
            if not M.contains(vec_of_dict(mul_dicts(pvB, {x: f.one}, rd), dB, f)) or \
               not M.contains(vec_of_dict(mul_dicts(pvB, rd, {x: f.one}), dB, f)):
                raise ValueError("the degenerate subspace is not a two-sided "
                                 "ideal; the candidate cannot be minimalized")

    piv = set(M.pivots)
    keep = [c for c in range(dB) if c not in piv]
    dQ = len(keep)

    def project(v):
        res = M.reduce(v)
        return [res[c] for c in keep]

    def project_dict(d):
        return dict_of_vec(project(vec_of_dict(d, dB, f)))

    sections = [unit_vec(f, dB, c) for c in keep]
    mul_q = Tensor3((dQ, dQ, dQ))
    for i in range(dQ):
        for j in range(dQ):
            w = project(Bp.mulvec(sections[i], sections[j]))
            for k, c in enumerate(w):
                if c:
                    mul_q.add(i, j, k, c)

    def conjugate(op):
        out = [[f.zero] * dQ for _ in range(dQ)]
        for j in range(dQ):
            w = project(mat_apply(op, sections[j], f))
            for i, c in enumerate(w):
                out[i][j] = c
        return out

    left_q = [conjugate(op) for op in candidate.left_ops]
    right_q = [conjugate(op) for op in candidate.right_ops]
    da = candidate.coeff.dim
    theta_q = [[f.zero] * da for _ in range(dQ)]
    for m in range(da):
        w = project([candidate.theta[r][m] for r in range(dB)])
        for i, c in enumerate(w):
            theta_q[i][m] = c

    unit_q = None
    if Bp.unit is not None:
        unit_q = project(Bp.unit)
    alg_q = AlgebraData(f, ["q%d" % i for i in range(dQ)], mul_q, unit_q,
                        name="minimal quotient of %s" % Bp.name)
    out = GlobalizationCandidate(alg_q, theta_q, left_q, right_q,
                                 candidate.coeff,
                                 name="minimal quotient of %s" % getattr(
                                     candidate, "name", Bp.name))
    if bimodule is not None:
        cert = verify_globalization(out, bimodule)
        assert cert.ok, "quotient candidate failed verification: %r" % (cert.witnesses,)
        assert maximal_degenerate_subbimodule(out).dim == 0, \
            "quotient candidate is still not minimal"
    return out


# ---------------------------------------------------------------------------
# the free candidate on the full tensor space

def free_candidate_bimodule(b):
    """Candidate globalization on all of H⊗A⊗H: the embedding is
    a ↦ 1⊗a⊗1, the operator families multiply the outer legs, and the
    product twists through the antipode:

        (p⊗a⊗q)(p'⊗b⊗q') = Σ p₁ ⊗ (a↼q·S(q'₁))·(S(p₂)·p'⇀b) ⊗ q'₂.

    Every verification requirement except associativity of this product holds
    by construction; associativity depends on the instance, so the result is
    returned unverified — run verify_globalization to test it."""
    H, A = b.hopf, b.alg
    n, da = H.dim, A.dim
    f = H.field
    one = f.one
    N = n * da * n

    def idx(u, m, v):
        return (u * da + m) * n + v

    pvH = H.mul.pair_view()
    pvA = A.mul.pair_view()
    iv = H.comul.in1_view()
    s_cols = [dict_of_vec([H.antipode[r][j] for r in range(n)]) for j in range(n)]

    right_fac = {}
    for v in range(n):
        for w1 in range(n):
            kt = mul_dicts(pvH, {v: one}, s_cols[w1])
            for m in range(da):
                right_fac[(v, w1, m)] = b.right.apply(kt, {m: one})
    left_fac = {}
    for u2 in range(n):
        for up in range(n):
            ht = mul_dicts(pvH, s_cols[u2], {up: one})
            for m in range(da):
                left_fac[(u2, up, m)] = b.left.apply(ht, {m: one})

    mul = Tensor3((N, N, N))
    for u in range(n):
        for (u1, u2), c1 in iv.get(u, {}).items():
            for vp in range(n):
                for (w1, w2), c2 in iv.get(vp, {}).items():
                    cc = c1 * c2
                    for v in range(n):
                        for up in range(n):
                            for m in range(da):
                                a1 = right_fac[(v, w1, m)]
                                if not a1:
                                    continue
                                for mp in range(da):
                                    a2 = left_fac[(u2, up, mp)]
                                    if not a2:
                                        continue
                                    prod = mul_dicts(pvA, a1, a2)
                                    for t, ct in prod.items():
                                        mul.add(idx(u, m, v), idx(up, mp, vp),
                                                idx(u1, t, w2), cc * ct)

    theta = [[f.zero] * da for _ in range(N)]
    for i in range(n):
        if not H.unit[i]:
            continue
        for j in range(n):
            if not H.unit[j]:
                continue
            c = H.unit[i] * H.unit[j]
            for m in range(da):
                theta[idx(i, m, j)][m] = theta[idx(i, m, j)][m] + c

    left_ops = [[[f.zero] * N for _ in range(N)] for _ in range(n)]
    right_ops = [[[f.zero] * N for _ in range(N)] for _ in range(n)]
    for (g, u, p), c in H.mul.entries.items():
        mat = left_ops[g]
        for m in range(da):
            for v in range(n):
                mat[idx(p, m, v)][idx(u, m, v)] = mat[idx(p, m, v)][idx(u, m, v)] + c
    for (v, g, q), c in H.mul.entries.items():
        mat = right_ops[g]
        for u in range(n):
            for m in range(da):
                mat[idx(u, m, q)][idx(u, m, v)] = mat[idx(u, m, q)][idx(u, m, v)] + c

    names = ["%s⊗%s⊗%s" % (H.basis[u], A.basis[m], H.basis[v])
             for u in range(n) for m in range(da) for v in range(n)]
    alg = AlgebraData(f, names, mul, None,
                      name="twisted tensor candidate over %s" % A.name)
    return GlobalizationCandidate(alg, theta, left_ops, right_ops, A,
                                  name="twisted tensor candidate over %s" % A.name)


# ---------------------------------------------------------------------------
# the standard bicomodule globalization

def _assert_global_bicomodule(alg_b, hopf, rho, lam):
    """Raise unless the restricted coactions make the (possibly non-unital)
    algebra an honest two-sided comodule algebra."""
    dB = alg_b.dim
    n = hopf.dim
    f = hopf.field
    pvB = alg_b.mul.pair_view()
    pvH = hopf.mul.pair_view()
    iv_rho = rho.in1_view()
    iv_lam = lam.in1_view()
    iv_com = hopf.comul.in1_view()
    empty = {}

    for i in range(dB):
        got = {}
        for (j, k), c in iv_rho.get(i, empty).items():
            if hopf.counit[k]:
                dict_acc(got, j, c * hopf.counit[k])
        if got != {i: f.one}:
            raise AssertionError("restricted right coaction fails the counit "
                                 "law at basis %d" % i)
        got = {}
        for (p, q), c in iv_lam.get(i, empty).items():
            if hopf.counit[p]:
                dict_acc(got, q, c * hopf.counit[p])
        if got != {i: f.one}:
            raise AssertionError("restricted left coaction fails the counit "
                                 "law at basis %d" % i)

    for i in range(dB):
        lhs, rhs = {}, {}
        for (j, k), c in iv_rho.get(i, empty).items():
            for (j2, k2), c2 in iv_rho.get(j, empty).items():
                dict_acc(lhs, (j2, k2, k), c * c2)
            for (k1, k2), c2 in iv_com.get(k, empty).items():
                dict_acc(rhs, (j, k1, k2), c * c2)
        if lhs != rhs:
            raise AssertionError("restricted right coaction is not "
                                 "coassociative at basis %d" % i)
        lhs, rhs = {}, {}
        for (p, q), c in iv_lam.get(i, empty).items():
            for (p2, q2), c2 in iv_lam.get(q, empty).items():
                dict_acc(lhs, (p, p2, q2), c * c2)
            for (p1, p2), c2 in iv_com.get(p, empty).items():
                dict_acc(rhs, (p1, p2, q), c * c2)
        if lhs != rhs:
            raise AssertionError("restricted left coaction is not "
                                 "coassociative at basis %d" % i)
        lhs, rhs = {}, {}
        for (p, q), c in iv_lam.get(i, empty).items():
            for (j, k), c2 in iv_rho.get(q, empty).items():
                dict_acc(lhs, (p, j, k), c * c2)
        for (j, k), c in iv_rho.get(i, empty).items():
            for (p, q), c2 in iv_lam.get(j, empty).items():
                dict_acc(rhs, (p, q, k), c * c2)
        if lhs != rhs:
            raise AssertionError("restricted coactions are not compatible "
                                 "at basis %d" % i)

    rho_d = {i: iv_rho.get(i, empty) for i in range(dB)}
    lam_d = {i: iv_lam.get(i, empty) for i in range(dB)}
    for x in range(dB):
        for y in range(dB):
            mxy = pvB.get((x, y), empty)
            lhs = {}
            for t, c in mxy.items():
                for (j, k), d in rho_d[t].items():
                    dict_acc(lhs, (j, k), c * d)
            rhs = {}
            for (j1, k1), c1 in rho_d[x].items():
                for (j2, k2), c2 in rho_d[y].items():
                    cc = c1 * c2
                    row_b = pvB.get((j1, j2))
                    row_h = pvH.get((k1, k2))
                    if not row_b or not row_h:
                        continue
                    for tb, cb in row_b.items():
                        for th, ch in row_h.items():
                            dict_acc(rhs, (tb, th), cc * cb * ch)
            if lhs != rhs:
                raise AssertionError("restricted right coaction is not "
                                     "multiplicative at basis pair (%d, %d)" % (x, y))
            lhs = {}
            for t, c in mxy.items():
                for (p, q), d in lam_d[t].items():
                    dict_acc(lhs, (p, q), c * d)
            rhs = {}
            for (p1, q1), c1 in lam_d[x].items():
                for (p2, q2), c2 in lam_d[y].items():
                    cc = c1 * c2
                    row_h = pvH.get((p1, p2))
                    row_b = pvB.get((q1, q2))
                    if not row_b or not row_h:
                        continue
                    for th, ch in row_h.items():
                        for tb, cb in row_b.items():
                            dict_acc(rhs, (th, tb), cc * ch * cb)
            if lhs != rhs:
                raise AssertionError("restricted left coaction is not "
                                     "multiplicative at basis pair (%d, %d)" % (x, y))


def two_stage_closure(ambient, seed):
    """The staged computation of the generated subalgebra: first close the
    seed under the two dual operator families alone, then close the result
    under the product alone.  Used as an oracle for the combined fixpoint."""
    stage1 = closure_fixpoint(seed, ambient.dual_left_ops + ambient.dual_right_ops, [])
    return closure_fixpoint(stage1, [], [ambient.algebra.mul])


def standard_globalize_bicomodule(b, two_stage_check=False):
    """Globalize a certified partial bicomodule structure on A inside the
    three-fold tensor H⊗A⊗H with componentwise product and outer-leg
    comultiplications as coactions.

    The embedding composes the two partial coactions (both orders are
    computed and must agree); the carrier is generated from the image by the
    two dual-basis operator families together with the product, computed as
    one combined fixpoint.  With two_stage_check the staged computation
    (operators first, then products) is run as well and must agree.
    The coactions are restricted to the carrier, the restricted structure is
    certified as a global two-sided comodule algebra, and the exchange
    condition
        (λ(θ(a))⊗1)(1⊗ρ(θ(b))) = (I⊗θ⊗I)[(λ̄(a)⊗1)(1⊗ρ̄(b))]
    is checked on all basis pairs.
    """
    rep = check_bicomodule(b)
    if not rep.passed:
        law, idx, _, _ = rep.failures[0]
        raise ValueError("input bicomodule fails %s at %s" % (law, idx))
    H, A = b.hopf, b.alg
    n, da = H.dim, A.dim
    f = H.field
    amb = tensor_hah(H, A)
    N = amb.algebra.dim

    rho_of = b.right.map.in1_view()
    lam_of = b.left.map.in1_view()
    empty = {}

    theta_d = []
    for i in range(da):
        col = {}
        for (j, k), c in rho_of.get(i, empty).items():
            for (p, q), c2 in lam_of.get(j, empty).items():
                dict_acc(col, amb.index(p, q, k), c * c2)
        other = {}
        for (p, q), c in lam_of.get(i, empty).items():
            for (j, k), c2 in rho_of.get(q, empty).items():
                dict_acc(other, amb.index(p, j, k), c * c2)
        if col != other:
            raise AssertionError("the two composite-embedding formulas disagree "
                                 "at basis %s" % A.basis[i])
        theta_d.append(col)

    theta = [[f.zero] * da for _ in range(N)]
    for m, col in enumerate(theta_d):
        for r, c in col.items():
            theta[r][m] = c
    rank, _, _ = rref([vec_of_dict(col, N, f) for col in theta_d], f)
    if rank != da:
        raise ValueError("composite embedding is not injective (rank %d of %d)"
                         % (rank, da))

    seed = subspace_span([vec_of_dict(col, N, f) for col in theta_d], N, f)
    span = closure_fixpoint(seed, amb.dual_left_ops + amb.dual_right_ops,
                            [amb.algebra.mul])
    certificate = {"theta_injective": True, "formulas_agree": True}
    if two_stage_check:
        staged = two_stage_closure(amb, seed)
        if staged != span:
            raise AssertionError("staged closure differs from the combined "
                                 "fixpoint (%d vs %d dimensions)"
                                 % (staged.dim, span.dim))
        certificate["two_stage_agrees"] = True
    dB = span.dim

    mul = _restrict_product(amb.algebra, span)

    induced_rho = Tensor3((dB, dB, n))
    induced_lam = Tensor3((dB, n, dB))
    rho_iv = amb.rho.in1_view()
    lam_iv = amb.lam.in1_view()
    for r_idx, r in enumerate(span.rows):
        slices = {}
        for x, cx in enumerate(r):
            if not cx:
                continue
            for (xp, k), c in rho_iv.get(x, empty).items():
                sl = slices.get(k)
                if sl is None:
                    sl = slices[k] = zeros(f, N)
                sl[xp] = sl[xp] + cx * c
        for k, sl in slices.items():
            cs = span.coords(sl)
            if cs is None:
                raise ValueError("the right coaction does not restrict to the "
                                 "generated carrier (basis %d, output leg %s)"
                                 % (r_idx, H.basis[k]))
            for j, c in enumerate(cs):
                if c:
                    induced_rho.add(r_idx, j, k, c)
        slices = {}
        for x, cx in enumerate(r):
            if not cx:
                continue
            for (p, xp), c in lam_iv.get(x, empty).items():
                sl = slices.get(p)
                if sl is None:
                    sl = slices[p] = zeros(f, N)
                sl[xp] = sl[xp] + cx * c
        for p, sl in slices.items():
            cs = span.coords(sl)
            if cs is None:
                raise ValueError("the left coaction does not restrict to the "
                                 "generated carrier (basis %d, output leg %s)"
                                 % (r_idx, H.basis[p]))
            for j, c in enumerate(cs):
                if c:
                    induced_lam.add(r_idx, p, j, c)
    certificate["coactions_restrict"] = True

    unit_b = span.coords(amb.algebra.unit) if span.contains(amb.algebra.unit) else None
    alg_b = AlgebraData(f, ["b%d" % i for i in range(dB)], mul, unit_b,
                        name="globalization of %s" % A.name)
    _assert_global_bicomodule(alg_b, H, induced_rho, induced_lam)
    certificate["global_laws_ok"] = True

    # the exchange condition, in ambient coordinates: compare the five-leg
    # products of the ambient coactions of embedded elements with the image
    # of the partial-coaction product
    pv_h = H.mul.pair_view()
    pv_x = amb.algebra.mul.pair_view()
    pv_a = A.mul.pair_view()
    u_h = dict_of_vec(H.unit)
    for i in range(da):
        lam_theta = {}
        for x, cx in theta_d[i].items():
            for (p, xp), c in lam_iv.get(x, empty).items():
                for u0, cu in u_h.items():
                    dict_acc(lam_theta, (p, xp, u0), cx * c * cu)
        for j in range(da):
            rho_theta = {}
            for x, cx in theta_d[j].items():
                for (xp, k), c in rho_iv.get(x, empty).items():
                    for u0, cu in u_h.items():
                        dict_acc(rho_theta, (u0, xp, k), cx * c * cu)
            lhs = t3_mul(pv_h, pv_x, pv_h, lam_theta, rho_theta)
            rhs = {}
            for (p, q), c1 in lam_of.get(i, empty).items():
                for (u, v), c2 in rho_of.get(j, empty).items():
                    row = pv_a.get((q, u))
                    if not row:
                        continue
                    cc = c1 * c2
                    for t, ct in row.items():
                        for x, cx in theta_d[t].items():
                            dict_acc(rhs, (p, x, v), cc * ct * cx)
            if lhs != rhs:
                raise AssertionError("exchange condition fails at basis pair "
                                     "(%s, %s)" % (A.basis[i], A.basis[j]))
    certificate["exchange_ok"] = True

    theta_b = [[f.zero] * da for _ in range(dB)]
    for m, col in enumerate(theta_d):
        cs = span.coords(vec_of_dict(col, N, f))
        if cs is None:
            raise AssertionError("embedded element %s escapes the carrier"
                                 % A.basis[m])
        for r, c in enumerate(cs):
            theta_b[r][m] = c

    return BicomoduleGlobalization(H, A, amb, theta, span, alg_b,
                                   induced_rho, induced_lam, theta_b, certificate)


# ---------------------------------------------------------------------------
# the bridge between the two standard globalizations

def psi_map(hopf, coeff, bicomodule_glob, bimodule_glob):
    """Match the two standard globalizations of one partial bicomodule
    structure: the index permutation

        h_u ⊗ a ⊗ h_v  ↦  (functional sending f⊗g to g(h_u)·a·f(h_v))

    maps the three-fold tensor onto the convolution algebra over the dual
    Hopf algebra.  Verifies that it is injective, an algebra map, that it
    intertwines both dual operator families, that it matches the two
    embeddings exactly, and that it restricts to an isomorphism between the
    two generated carriers.  Returns (matrix, injective, intertwines,
    restricted_iso)."""
    H, A = hopf, coeff
    n, da = H.dim, A.dim
    f = H.field
    bg, std = bicomodule_glob, bimodule_glob
    if not same_hopf(std.hopf, dual_hopf(H)):
        raise ValueError("the module-side globalization must be taken over "
                         "the dual Hopf algebra")
    if not same_algebra(std.coeff, A) or not same_algebra(bg.coeff, A):
        raise ValueError("the two globalizations must share the coefficient algebra")
    amb_x = bg.ambient
    amb_k = std.ambient
    N = amb_x.algebra.dim
    if amb_k.algebra.dim != N:
        raise ValueError("ambient dimensions disagree (%d vs %d)"
                         % (N, amb_k.algebra.dim))

    perm = [0] * N
    for u in range(n):
        for m in range(da):
            for v in range(n):
                perm[amb_x.index(u, m, v)] = amb_k.index(v, u, m)
    psi = [[f.zero] * N for _ in range(N)]
    for x, t in enumerate(perm):
        psi[t][x] = f.one
    mono = len(set(perm)) == N
    assert mono, "index permutation is not a bijection"

    def push(d):
        return {perm[x]: c for x, c in d.items()}

    pv_x = amb_x.algebra.mul.pair_view()
    pv_k = amb_k.algebra.mul.pair_view()
    empty = {}
    for x in range(N):
        for y in range(N):
            lhs = push(pv_x.get((x, y), empty))
            rhs = pv_k.get((perm[x], perm[y]), empty)
            assert lhs == rhs, ("the permutation is not an algebra map at "
                                "basis pair (%d, %d)" % (x, y))
    assert push(dict_of_vec(amb_x.algebra.unit)) == \
        dict_of_vec(amb_k.algebra.unit), "the permutation does not match the units"

    intertwines = True
    x_left = [_col_dicts(op) for op in amb_x.dual_left_ops]
    x_right = [_col_dicts(op) for op in amb_x.dual_right_ops]
    k_left = [_col_dicts(op) for op in amb_k.left_ops]
    k_right = [_col_dicts(op) for op in amb_k.right_ops]
    for g in range(n):
        for x in range(N):
            if push(x_left[g][x]) != k_left[g][perm[x]] or \
                    push(x_right[g][x]) != k_right[g][perm[x]]:
                intertwines = False
                break
        if not intertwines:
            break

    for m in range(da):
        lhs = push(dict_of_vec([bg.theta[r][m] for r in range(N)]))
        rhs = dict_of_vec([std.phi[r][m] for r in range(N)])
        assert lhs == rhs, ("the permutation does not match the embeddings "
                            "at basis %s" % A.basis[m])

    image = Subspace(N, f, [vec_of_dict(push(dict_of_vec(r)), N, f)
                            for r in bg.b_basis.rows])
    restricted_iso = (image.dim == bg.b_basis.dim and image == std.b_basis)

    return psi, mono, intertwines, restricted_iso
