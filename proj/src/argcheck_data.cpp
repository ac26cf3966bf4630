// Expected argument-difference data for the geometric verifier: consecutive
// orbit step tables keyed by the residue class of c' (per ell and additive
// shift), boundary-point comparison values, per-step rotation laws for the
// progression orbits, and the golden argument tables in CSV form.
//
// Known transcription corrections are applied here and surfaced as notes by
// the verifier (see argcheck.cpp): the shift-5 class-4 table's last ell=1
// step must close the cycle to +3/7, and the modulus-25 per-step rotation
// follows a two-class law rather than a single uniform turn.

#include "rankkl/argcheck.hpp"

namespace rankkl {
namespace argdata {
namespace {
Rat R(long n, long d = 1) { return make_rat(n, d); }
}  // namespace

// Square styles, modulus 5, shift 4: steps 1->2->3->4->1 keyed by (ell, c' mod 5).
const StepTable& consecutive5_shift4() {
    static const StepTable t = {
        {{1, 1}, {R(3, 10), R(1, 10), R(3, 10), R(3, 10)}},
        {{1, 2}, {R(1, 2), R(1, 2), R(1, 2), R(1, 2)}},
        {{1, 3}, {R(1, 2), R(1, 2), R(1, 2), R(1, 2)}},
        {{1, 4}, {R(7, 10), R(9, 10), R(7, 10), R(7, 10)}},
        {{2, 1}, {R(0), R(1, 2), R(0), R(1, 2)}},
        {{2, 2}, {R(2, 5), R(3, 10), R(2, 5), R(9, 10)}},
        {{2, 3}, {R(3, 5), R(7, 10), R(3, 5), R(1, 10)}},
        {{2, 4}, {R(0), R(1, 2), R(0), R(1, 2)}},
    };
    return t;
}

// Square styles, modulus 5, shift 1.
const StepTable& consecutive5_shift1() {
    static const StepTable t = {
        {{1, 1}, {R(7, 10), R(1, 2), R(7, 10), R(1, 10)}},
        {{1, 2}, {R(7, 10), R(7, 10), R(7, 10), R(9, 10)}},
        {{1, 3}, {R(3, 10), R(3, 10), R(3, 10), R(1, 10)}},
        {{1, 4}, {R(3, 10), R(1, 2), R(3, 10), R(9, 10)}},
        {{2, 1}, {R(2, 5), R(9, 10), R(2, 5), R(3, 10)}},
        {{2, 2}, {R(3, 5), R(1, 2), R(3, 5), R(3, 10)}},
        {{2, 3}, {R(2, 5), R(1, 2), R(2, 5), R(7, 10)}},
        {{2, 4}, {R(3, 5), R(1, 10), R(3, 5), R(7, 10)}},
    };
    return t;
}

// Square styles, modulus 5, shift 2.
const StepTable& consecutive5_shift2() {
    static const StepTable t = {
        {{1, 1}, {R(9, 10), R(7, 10), R(9, 10), R(1, 2)}},
        {{1, 2}, {R(3, 10), R(3, 10), R(3, 10), R(1, 10)}},
        {{1, 3}, {R(7, 10), R(7, 10), R(7, 10), R(9, 10)}},
        {{1, 4}, {R(1, 10), R(3, 10), R(1, 10), R(1, 2)}},
        {{2, 1}, {R(3, 5), R(1, 10), R(3, 5), R(7, 10)}},
        {{2, 2}, {R(1, 5), R(1, 10), R(1, 5), R(1, 2)}},
        {{2, 3}, {R(4, 5), R(9, 10), R(4, 5), R(1, 2)}},
        {{2, 4}, {R(2, 5), R(9, 10), R(2, 5), R(3, 10)}},
    };
    return t;
}

// Hexagon styles, modulus 7, shift 5, classes with c'*ell != +-1 (mod 7).
const StepTable& consecutive7_shift5_plain() {
    static const StepTable t = {
        {{1, 2}, {R(9, 14), R(5, 7), R(6, 7), R(5, 7), R(9, 14), R(3, 7)}},
        {{1, 3}, {R(5, 14), R(2, 7), R(1, 7), R(2, 7), R(5, 14), R(4, 7)}},
        {{1, 4}, {R(9, 14), R(5, 7), R(6, 7), R(5, 7), R(9, 14), R(3, 7)}},
        {{1, 5}, {R(5, 14), R(2, 7), R(1, 7), R(2, 7), R(5, 14), R(4, 7)}},
        {{2, 1}, {R(11, 14), R(13, 14), R(5, 7), R(13, 14), R(11, 14), R(6, 7)}},
        {{2, 2}, {R(11, 14), R(13, 14), R(5, 7), R(13, 14), R(11, 14), R(6, 7)}},
        {{2, 5}, {R(3, 14), R(1, 14), R(2, 7), R(1, 14), R(3, 14), R(1, 7)}},
        {{2, 6}, {R(3, 14), R(1, 14), R(2, 7), R(1, 14), R(3, 14), R(1, 7)}},
        {{3, 1}, {R(4, 7), R(5, 14), R(3, 7), R(5, 14), R(4, 7), R(5, 7)}},
        {{3, 3}, {R(3, 7), R(9, 14), R(4, 7), R(9, 14), R(3, 7), R(2, 7)}},
        {{3, 4}, {R(4, 7), R(5, 14), R(3, 7), R(5, 14), R(4, 7), R(5, 7)}},
        {{3, 6}, {R(3, 7), R(9, 14), R(4, 7), R(9, 14), R(3, 7), R(2, 7)}},
    };
    return t;
}

// Hexagon styles, modulus 7, shift 5, boundary classes c'*ell = +-1 (mod 7).
const StepTable& consecutive7_shift5_boundary() {
    static const StepTable t = {
        {{1, 1}, {R(3, 14), R(4, 7), R(2, 7), R(4, 7), R(3, 14), R(1, 7)}},
        {{1, 6}, {R(11, 14), R(3, 7), R(5, 7), R(3, 7), R(11, 14), R(6, 7)}},
        {{2, 3}, {R(1, 14), R(5, 14), R(3, 7), R(5, 14), R(1, 14), R(5, 7)}},
        {{2, 4}, {R(13, 14), R(9, 14), R(4, 7), R(9, 14), R(13, 14), R(2, 7)}},
        {{3, 2}, {R(6, 7), R(11, 14), R(1, 7), R(11, 14), R(6, 7), R(4, 7)}},
        {{3, 5}, {R(1, 7), R(3, 14), R(6, 7), R(3, 14), R(1, 7), R(3, 7)}},
    };
    return t;
}

// Hexagon styles, modulus 7, shift 0 (all ell rows printed per class).
const StepTable& consecutive7_shift0() {
    static const StepTable t = {
        {{1, 1}, {R(1, 2), R(6, 7), R(4, 7), R(6, 7), R(1, 2), R(5, 7)}},
        {{1, 2}, {R(11, 14), R(6, 7), R(0), R(6, 7), R(11, 14), R(5, 7)}},
        {{1, 3}, {R(11, 14), R(5, 7), R(4, 7), R(5, 7), R(11, 14), R(3, 7)}},
        {{1, 4}, {R(3, 14), R(2, 7), R(3, 7), R(2, 7), R(3, 14), R(4, 7)}},
        {{1, 5}, {R(3, 14), R(1, 7), R(0), R(1, 7), R(3, 14), R(2, 7)}},
        {{1, 6}, {R(1, 2), R(1, 7), R(3, 7), R(1, 7), R(1, 2), R(2, 7)}},
        {{2, 1}, {R(1, 14), R(3, 14), R(0), R(3, 14), R(1, 14), R(3, 7)}},
        {{2, 2}, {R(13, 14), R(1, 14), R(6, 7), R(1, 14), R(13, 14), R(1, 7)}},
        {{2, 3}, {R(1, 2), R(11, 14), R(6, 7), R(11, 14), R(1, 2), R(4, 7)}},
        {{2, 4}, {R(1, 2), R(3, 14), R(1, 7), R(3, 14), R(1, 2), R(3, 7)}},
        {{2, 5}, {R(1, 14), R(13, 14), R(1, 7), R(13, 14), R(1, 14), R(6, 7)}},
        {{2, 6}, {R(13, 14), R(11, 14), R(0), R(11, 14), R(13, 14), R(4, 7)}},
        {{3, 1}, {R(6, 7), R(9, 14), R(5, 7), R(9, 14), R(6, 7), R(2, 7)}},
        {{3, 2}, {R(0), R(13, 14), R(2, 7), R(13, 14), R(0), R(6, 7)}},
        {{3, 3}, {R(6, 7), R(1, 14), R(0), R(1, 14), R(6, 7), R(1, 7)}},
        {{3, 4}, {R(1, 7), R(13, 14), R(0), R(13, 14), R(1, 7), R(6, 7)}},
        {{3, 5}, {R(0), R(1, 14), R(5, 7), R(1, 14), R(0), R(1, 7)}},
        {{3, 6}, {R(1, 7), R(5, 14), R(2, 7), R(5, 14), R(1, 7), R(5, 7)}},
    };
    return t;
}

// Boundary-to-anchor total argument difference keyed by c' mod 7: shift 5.
const std::map<int, BoundaryTotal>& boundary_totals_shift5() {
    static const std::map<int, BoundaryTotal> t = {
        {1, {1, R(4, 7)}},
        {2, {3, R(11, 14)}},
        {3, {2, R(5, 14)}},
        {4, {2, R(9, 14)}},
        {5, {3, R(3, 14)}},
        {6, {1, R(3, 7)}},
    };
    return t;
}

// Boundary-to-anchor total argument difference keyed by c' mod 7: shift 0.
const std::map<int, BoundaryTotal>& boundary_totals_shift0() {
    static const std::map<int, BoundaryTotal> t = {
        {1, {1, R(6, 7)}},
        {2, {3, R(13, 14)}},
        {3, {2, R(11, 14)}},
        {4, {2, R(3, 14)}},
        {5, {3, R(1, 14)}},
        {6, {1, R(1, 7)}},
    };
    return t;
}

// Printed beta values accompanying the shift-0 hexagon tables (class 3 is
// not printed; -1 marks it, and the verifier recomputes it from beta*c'=1).
const std::map<int, int>& printed_beta_shift0() {
    static const std::map<int, int> t = {{1, 1}, {2, 4}, {3, -1}, {4, 2}, {5, 3}, {6, 6}};
    return t;
}

// Per-factor boundary-to-anchor differences keyed by (bracket, A even, ell).
const BoundaryFactorTable& boundary_factor_diffs() {
    static const BoundaryFactorTable t = {
        {{1, 0, 1}, {R(1, 28), R(23, 28), R(5, 7), R(4, 7)}},
        {{1, 0, 2}, {R(23, 28), R(11, 28), R(3, 7), R(9, 14)}},
        {{1, 0, 3}, {R(17, 28), R(13, 28), R(1, 7), R(3, 14)}},
        {{1, 1, 1}, {R(15, 28), R(9, 28), R(5, 7), R(4, 7)}},
        {{1, 1, 2}, {R(23, 28), R(11, 28), R(3, 7), R(9, 14)}},
        {{1, 1, 3}, {R(3, 28), R(27, 28), R(1, 7), R(3, 14)}},
        {{6, 0, 1}, {R(27, 28), R(5, 28), R(2, 7), R(3, 7)}},
        {{6, 0, 2}, {R(5, 28), R(17, 28), R(4, 7), R(5, 14)}},
        {{6, 0, 3}, {R(11, 28), R(15, 28), R(6, 7), R(11, 14)}},
        {{6, 1, 1}, {R(13, 28), R(19, 28), R(2, 7), R(3, 7)}},
        {{6, 1, 2}, {R(5, 28), R(17, 28), R(4, 7), R(5, 14)}},
        {{6, 1, 3}, {R(25, 28), R(1, 28), R(6, 7), R(11, 14)}},
    };
    return t;
}

// Per-step rotation for progression orbits, modulus 5: (shift, min(d,5-d) mod 5) -> turn.
const RotationTable& step_rotation5() {
    static const RotationTable t = {
        {{1, 1}, R(1, 5)},
        {{1, 2}, R(3, 5)},
        {{2, 1}, R(2, 5)},
        {{2, 2}, R(4, 5)},
        {{4, 1}, R(4, 5)},
        {{4, 2}, R(1, 5)},
    };
    return t;
}

// Per-step rotation for progression orbits, modulus 7: (shift, min(d,7-d) mod 7) -> turn.
const RotationTable& step_rotation7() {
    static const RotationTable t = {
        {{0, 1}, R(0)},
        {{0, 2}, R(5, 7)},
        {{0, 3}, R(1, 7)},
        {{5, 1}, R(5, 7)},
        {{5, 2}, R(3, 7)},
        {{5, 3}, R(6, 7)},
    };
    return t;
}

const std::array<const char*, 7>& golden_table_csv() {
    static const std::array<const char*, 7> t = {
        // table 1
        R"csv(
# Argument differences, first orbit term to fourth, shift 4 (turns in [0,1)); c' odd and coprime to 3.
cprime_mod30,beta,f1_ell1,f2,f3,total_ell1,f1_ell2,total_ell2
1,1,1/10,1/5,2/5,7/10,9/10,1/2
7,3,7/10,3/5,1/5,1/2,3/10,1/10
11,1,1/10,1/5,2/5,7/10,9/10,1/2
13,2,3/10,2/5,4/5,1/2,7/10,9/10
17,3,7/10,3/5,1/5,1/2,3/10,1/10
19,4,9/10,4/5,3/5,3/10,1/10,1/2
23,2,3/10,2/5,4/5,1/2,7/10,9/10
29,4,9/10,4/5,3/5,3/10,1/10,1/2
)csv" + 1,
        // table 2
        R"csv(
# Argument differences, first orbit term to second, shift 4 (turns in [0,1)); c' odd and coprime to 3.
cprime_mod30,beta,f1_ell1,f2,f3,total_ell1,f1_ell2,total_ell2
1,1,2/5,1/10,4/5,3/10,1/10,0
7,3,4/5,3/10,2/5,1/2,7/10,2/5
11,1,2/5,1/10,4/5,3/10,1/10,0
13,2,1/5,7/10,3/5,1/2,3/10,3/5
17,3,4/5,3/10,2/5,1/2,7/10,2/5
19,4,3/5,9/10,1/5,7/10,9/10,0
23,2,1/5,7/10,3/5,1/2,3/10,3/5
29,4,3/5,9/10,1/5,7/10,9/10,0
)csv" + 1,
        // table 3
        R"csv(
# Argument differences, first orbit term to fourth, shift 4 (turns in [0,1)); c' odd, divisible by 3.
cprime_mod30,beta,f1_ell1,f23,total_ell1,f1_ell2,total_ell2
3,2,3/10,1/5,1/2,7/10,9/10
9,4,9/10,2/5,3/10,1/10,1/2
21,1,1/10,3/5,7/10,9/10,1/2
27,3,7/10,4/5,1/2,3/10,1/10
)csv" + 1,
        // table 4
        R"csv(
# Argument differences, first orbit term to second, shift 4 (turns in [0,1)); c' odd, divisible by 3.
cprime_mod30,beta,f1_ell1,f2,f3,total_ell1,f1_ell2,total_ell2
3,2,1/5,7/10,3/5,1/2,3/10,3/5
9,4,3/5,9/10,1/5,7/10,9/10,0
21,1,2/5,1/10,4/5,3/10,1/10,0
27,3,4/5,3/10,2/5,1/2,7/10,2/5
)csv" + 1,
        // table 5
        R"csv(
# Argument differences, first orbit term to fourth, shift 4 (turns in [0,1)); c' even.
cprime_mod30,beta,f1_ell1,f23,total_ell1,f1_ell2,total_ell2
2,3,7/10,4/5,1/2,3/10,1/10
4,4,9/10,2/5,3/10,1/10,1/2
6,1,1/10,3/5,7/10,9/10,1/2
8,2,3/10,1/5,1/2,7/10,9/10
12,3,7/10,4/5,1/2,3/10,1/10
14,4,9/10,2/5,3/10,1/10,1/2
16,1,1/10,3/5,7/10,9/10,1/2
18,2,3/10,1/5,1/2,7/10,9/10
22,3,7/10,4/5,1/2,3/10,1/10
24,4,9/10,2/5,3/10,1/10,1/2
26,1,1/10,3/5,7/10,9/10,1/2
28,2,3/10,1/5,1/2,7/10,9/10
)csv" + 1,
        // table 6
        R"csv(
# Argument differences, first orbit term to second, shift 4 (turns in [0,1)); c' even.
cprime_mod30,beta,f1_ell1,f2,f3,total_ell1,f1_ell2,total_ell2
2,3,4/5,3/10,2/5,1/2,7/10,2/5
4,4,3/5,9/10,1/5,7/10,9/10,0
6,1,2/5,1/10,4/5,3/10,1/10,0
8,2,1/5,7/10,3/5,1/2,3/10,3/5
12,3,4/5,3/10,2/5,1/2,7/10,2/5
14,4,3/5,9/10,1/5,7/10,9/10,0
16,1,2/5,1/10,4/5,3/10,1/10,0
18,2,1/5,7/10,3/5,1/2,3/10,3/5
22,3,4/5,3/10,2/5,1/2,7/10,2/5
24,4,3/5,9/10,1/5,7/10,9/10,0
26,1,2/5,1/10,4/5,3/10,1/10,0
28,2,1/5,7/10,3/5,1/2,3/10,3/5
)csv" + 1,
        // table 7
        R"csv(
# Per-factor argument differences from the boundary point to the anchor orbit term, shift 5 (turns in [0,1)),
# keyed by the residue bracket of A*ell mod 7 (1 or 6) and the parity of A.
bracket,parity,ell,f1,f2,f3,total
1,odd,1,1/28,23/28,5/7,4/7
1,odd,2,23/28,11/28,3/7,9/14
1,odd,3,17/28,13/28,1/7,3/14
1,even,1,15/28,9/28,5/7,4/7
1,even,2,23/28,11/28,3/7,9/14
1,even,3,3/28,27/28,1/7,3/14
6,odd,1,27/28,5/28,2/7,3/7
6,odd,2,5/28,17/28,4/7,5/14
6,odd,3,11/28,15/28,6/7,11/14
6,even,1,13/28,19/28,2/7,3/7
6,even,2,5/28,17/28,4/7,5/14
6,even,3,25/28,1/28,6/7,11/14
)csv" + 1,
    };
    return t;
}

}  // namespace argdata
}  // namespace rankkl
