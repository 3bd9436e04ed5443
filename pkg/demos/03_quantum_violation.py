"""How far qubit measurements can push each inequality past its bound.

For fixed Bloch-vector observables the inequality becomes a Hermitian
operator whose top eigenvalue bounds the quantum value; see-saw alternation
(state step = top eigenvector, direction step = normalized Pauli expectation
vector) climbs monotonically to a local optimum, and restarts make the best
value a reliable lower bound on the true quantum maximum.
"""

import numpy as np

from bellfacets import (
    classify,
    evaluate_state,
    inequality_from_sign_function,
    seesaw_maximize,
)


def main():
    print("Quantum maxima of the six canonical two-observer classes (seed 7):")
    for cls in classify(2).canonical_classes:
        ineq = inequality_from_sign_function(cls.representative)
        report = seesaw_maximize(ineq, restarts=16, seed=7)
        tag = "violated" if report.quantum_violating else "classical"
        print(
            f"  {cls.representative.to_text()}  ratio {report.violation_ratio:.9f}  "
            f"({tag}, {report.restarts_used} restarts)"
        )
    print(f"\n  sqrt(2) = {np.sqrt(2):.9f}  <- the CHSH (Tsirelson) ceiling")

    print("\nCross-checking the reported CHSH optimum:")
    chsh_cls = [c for c in classify(2).canonical_classes if not c.factorable][0]
    ineq = inequality_from_sign_function(chsh_cls.representative)
    report = seesaw_maximize(ineq, restarts=16, seed=7)
    revalue = evaluate_state(ineq, report.directions, report.state)
    print(f"  <psi| B |psi> at the reported optimum: {revalue:.12f}")
    print(f"  reported quantum_max:                  {report.quantum_max:.12f}")
    print(f"  best state amplitudes: {np.round(report.state, 6)}")


if __name__ == "__main__":
    main()
