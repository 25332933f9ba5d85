"""Smoke test for the polyhelly extension module.

Build and install first, e.g. `maturin develop --release` from crates/python.
"""

import json

import polyhelly


def main():
    assert polyhelly.count_by_size(6) == [(1, 1), (2, 1), (3, 2), (4, 5), (5, 12), (6, 35)]
    assert len(polyhelly.enumerate_free(5)) == 12

    el = polyhelly.Polyomino([(0, 0), (1, 0), (0, 1)])
    assert len(el) == 3 and not el.is_rectangle()
    h, cert, shortcut = polyhelly.helly_number(el)
    assert (h, shortcut) == (4, "structure-lower-bound"), (h, shortcut)
    assert polyhelly.verify_certificate(cert) is None

    assert polyhelly.helly_number(polyhelly.Polyomino.rectangle(2, 3))[0] == 2

    f4 = polyhelly.make_fq(4)
    assert len(f4) == 9
    assert polyhelly.helly_number(f4)[0] == 5

    witness = json.loads(polyhelly.fq_witness(6))
    assert witness["h"] == 7 and len(witness["copies"]) == 7
    witness["copies"].pop()
    reason = polyhelly.verify_certificate(json.dumps(witness))
    assert reason is not None and "copies" in reason, reason

    try:
        polyhelly.Polyomino([(0, 0), (2, 0)])
    except ValueError:
        pass
    else:
        raise AssertionError("disconnected cells were accepted")

    print("polyhelly smoke test passed")


if __name__ == "__main__":
    main()
