import pytest

from conftest import QQ
from leonardz import linalg
from leonardz.errors import AxiomViolation, RepeatedEigenvalue, SingularBasis
from leonardz.parray import ParameterArray, build_parameter_array
from leonardz.realization import (
    intersection_a_closed,
    intersection_a_trace,
    primitive_idempotents,
    realize_split,
    standard_basis_rep,
    verify_axioms,
    verify_idempotent_set,
)


def qmat(rows):
    return [[QQ(x) for x in row] for row in rows]


@pytest.fixture(scope="module")
def worked(kraw_dim1):
    arr = build_parameter_array(kraw_dim1)
    real = realize_split(arr)
    e = primitive_idempotents(real.A, arr.theta, QQ)
    estar = primitive_idempotents(real.A_star, arr.theta_star, QQ)
    return arr, real, e, estar


def test_split_matrices_worked(worked):
    _, real, _, _ = worked
    assert real.A == qmat([[0, 0, 0, 0], [1, 1, 0, 0], [0, 1, 2, 0],
                           [0, 0, 1, 3]])
    assert real.A_star == qmat([[0, -6, 0, 0], [0, 1, -8, 0], [0, 0, 2, -6],
                                [0, 0, 0, 3]])


def test_split_shape_on_exemplars(exemplar_specs):
    for spec in exemplar_specs.values():
        arr = build_parameter_array(spec)
        real = realize_split(arr)
        n = arr.d + 1
        for i in range(n):
            for j in range(n):
                if j > i or i - j >= 2:
                    assert not real.A[i][j]
                if i > j or j - i >= 2:
                    assert not real.A_star[i][j]
            if i > 0:
                assert real.A[i][i - 1] == arr.field.one
                assert real.A_star[i - 1][i] == arr.phi1_at(i)


def test_counterexample_idempotent_columns():
    a = qmat([[1, 0, 0], [1, 2, 0], [0, 1, 5]])
    eigs = [QQ(1), QQ(2), QQ(5)]
    e = primitive_idempotents(a, eigs, QQ)
    assert [row[0] for row in e[0]] == [QQ(1), QQ(-1), QQ("1/4")]
    assert all(not e[0][i][j] for i in range(3) for j in (1, 2))
    assert e[2][2] == [QQ("1/12"), QQ("1/3"), QQ(1)]


def test_idempotents_of_diagonal_matrix():
    diag = qmat([[4, 0, 0], [0, 7, 0], [0, 0, 9]])
    e = primitive_idempotents(diag, [QQ(4), QQ(7), QQ(9)], QQ)
    for i in range(3):
        for r in range(3):
            for c in range(3):
                expected = QQ(1) if r == c == i else QQ(0)
                assert e[i][r][c] == expected


def test_repeated_eigenvalue_rejected():
    diag = qmat([[4, 0], [0, 4]])
    with pytest.raises(RepeatedEigenvalue):
        primitive_idempotents(diag, [QQ(4), QQ(4)], QQ)


def test_idempotent_set_full_verification(worked):
    arr, real, e, estar = worked
    verify_idempotent_set(e, real.A, arr.theta, QQ)
    verify_idempotent_set(estar, real.A_star, arr.theta_star, QQ)


def test_intersection_a_closed_decreasing(worked):
    arr, _, _, _ = worked
    assert intersection_a_closed(arr) == [QQ(6), QQ(3), QQ(0), QQ(-3)]


def test_intersection_a_constant(kraw_dim2):
    arr = build_parameter_array(kraw_dim2)
    assert intersection_a_closed(arr) == [QQ("3/2")] * 4


def test_intersection_a_closed_dual_q_krawtchouk(dual_q_krawtchouk_spec):
    arr = build_parameter_array(dual_q_krawtchouk_spec)
    assert intersection_a_closed(arr)[0] == QQ("-26/27")


def test_trace_route_equals_closed(worked):
    arr, real, _, estar = worked
    assert intersection_a_trace(real, estar) == intersection_a_closed(arr)


def test_trace_route_on_exemplars(exemplar_specs):
    for spec in exemplar_specs.values():
        arr = build_parameter_array(spec)
        real = realize_split(arr)
        estar = primitive_idempotents(real.A_star, arr.theta_star, arr.field)
        a = intersection_a_trace(real, estar)
        assert a == intersection_a_closed(arr)
        total = a[0]
        for x in a[1:]:
            total = total + x
        assert total == linalg.trace(real.A)


def test_a_sequence_reverses_with_dual_order(exemplar_specs):
    from leonardz.parray import reverse_dual

    for spec in exemplar_specs.values():
        arr = build_parameter_array(spec)
        flipped = intersection_a_closed(reverse_dual(arr))
        assert flipped == intersection_a_closed(arr)[::-1]


def test_standard_basis_worked(worked):
    arr, real, e, estar = worked
    std, nums = standard_basis_rep(real, e, estar)
    assert nums.a == [QQ(6), QQ(3), QQ(0), QQ(-3)]
    for i in range(4):
        for j in range(4):
            expected = arr.theta_star[i] if i == j else QQ(0)
            assert std.A_star[i][j] == expected
    assert all(nums.b) and all(nums.c)


def test_standard_basis_tridiagonal_on_exemplars(exemplar_specs):
    for spec in exemplar_specs.values():
        arr = build_parameter_array(spec)
        real = realize_split(arr)
        e = primitive_idempotents(real.A, arr.theta, arr.field)
        estar = primitive_idempotents(real.A_star, arr.theta_star, arr.field)
        std, nums = standard_basis_rep(real, e, estar)
        assert nums.a == intersection_a_closed(arr)
        assert all(nums.b) and all(nums.c)


def test_singular_basis_detected(worked):
    arr, real, _, estar = worked
    zero = [[QQ(0)] * 4 for _ in range(4)]
    with pytest.raises(SingularBasis):
        standard_basis_rep(real, [zero], estar)


def test_axioms_pass_on_worked(worked):
    arr, real, e, estar = worked
    assert verify_axioms(real, e, estar)


def test_axioms_detect_broken_superdiagonal(kraw_dim1):
    arr = build_parameter_array(kraw_dim1)
    broken = ParameterArray(arr.field, arr.d, arr.theta, arr.theta_star,
                            [QQ(0)] + arr.phi1[1:], arr.phi2)
    real = realize_split(broken)
    e = primitive_idempotents(real.A, arr.theta, QQ)
    estar = primitive_idempotents(real.A_star, arr.theta_star, QQ)
    with pytest.raises(AxiomViolation):
        verify_axioms(real, e, estar)


def test_counterexample_system_passes_patterns():
    a = qmat([[1, 0, 0], [1, 2, 0], [0, 1, 5]])
    a_star = qmat([[1, -1, 0], [0, 2, -9], [0, 0, 5]])
    eigs = [QQ(1), QQ(2), QQ(5)]
    e = primitive_idempotents(a, eigs, QQ)
    estar = primitive_idempotents(a_star, eigs, QQ)
    for outer, inner in ((estar, a), (e, a_star)):
        for i in range(3):
            for j in range(3):
                prod = linalg.mat_mul(linalg.mat_mul(outer[i], inner), outer[j])
                if abs(i - j) > 1:
                    assert linalg.is_zero_matrix(prod)
                if abs(i - j) == 1:
                    assert not linalg.is_zero_matrix(prod)
