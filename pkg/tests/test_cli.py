import pytest

from graphzeta.cli import main

WORKED_EXAMPLE = """\
digraph example
vertices 3
arc a1 1 2
arc a2 2 1
arc a3 2 1
arc a4 2 3
arc a5 3 2
arc a6 3 1
arc a7 1 1
arc a8 1 1
inverse a1 a2
inverse a4 a5
"""

THREE_CYCLE = """\
digraph c3
vertices 3
arc x 1 2
arc y 2 3
arc z 3 1
"""

LOOP_32 = """\
digraph loop
vertices 1
arc l 1 1 tau=2 upsilon=1/2
"""

LOOP_EQUAL = """\
digraph loop
vertices 1
arc l 1 1 tau=2 upsilon=2
"""

K4_GRAPH = """\
graph k4
vertices 4
edge 1 2
edge 1 3
edge 1 4
edge 2 3
edge 2 4
edge 3 4
"""

TWO_COMPONENTS = """\
digraph split
vertices 4
arc a 1 2
arc b 2 1
arc c 3 4
arc d 4 3
inverse a b
inverse c d
"""


@pytest.fixture
def write(tmp_path):
    def _write(text, name="input.dg"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestInfo:
    def test_worked_example_classes(self, write, capsys):
        code, out = run(capsys, "info", write(WORKED_EXAMPLE))
        assert code == 0
        assert "(1,2), (2,3)" in out
        assert "(1,1)" in out
        assert "(1,3)" in out
        assert "a1, a4" in out

    def test_three_cycle_all_one_way(self, write, capsys):
        code, out = run(capsys, "info", write(THREE_CYCLE))
        assert code == 0
        assert "one-way (no inverse):    x, y, z" in out

    def test_disconnected_warning(self, write, capsys):
        code, out = run(capsys, "info", write(TWO_COMPONENTS))
        assert code == 0
        assert "warning: not connected" in out

    def test_machine_mode(self, write, capsys):
        code, out = run(capsys, "info", write(WORKED_EXAMPLE), "--machine")
        assert code == 0
        assert "class.forward=a1,a4" in out
        assert "inverse.a7=a7" in out
        assert "correction.a3=1" in out


class TestZeta:
    def test_three_cycle(self, write, capsys):
        code, out = run(capsys, "zeta", write(THREE_CYCLE), "--preset", "ihara")
        assert code == 0
        assert "Z = 1/(1 - t^3)" in out
        assert "MAIN THEOREM: OK" in out

    def test_loop_with_file_weights(self, write, capsys):
        code, out = run(capsys, "zeta", write(LOOP_32))
        assert code == 0
        assert "Z = 1/(1 - 3/2*t)" in out

    def test_k4_denominator(self, write, capsys, tmp_path):
        code, sym = run(capsys, "symmetrize", write(K4_GRAPH, "k4.g"))
        assert code == 0
        dg_path = tmp_path / "k4.dg"
        dg_path.write_text(sym)
        code, out = run(capsys, "zeta", str(dg_path), "--preset", "ihara", "--form", "hashimoto")
        assert code == 0
        from graphzeta.algebra import T

        expected = (1 - T**2) ** 2 * (1 - T) * (1 - 2 * T) * (1 + T + 2 * T**2) ** 3
        assert f"Z = 1/({expected})" in out

    def test_single_forms(self, write, capsys):
        code, out = run(capsys, "zeta", write(THREE_CYCLE), "--form", "ihara")
        assert code == 0
        assert "block factor = 1" in out
        assert "vertex factor = 1 - t^3" in out


class TestSeries:
    def test_three_cycle(self, write, capsys):
        code, out = run(capsys, "series", write(THREE_CYCLE), "--preset", "ihara", "--order", "6")
        assert code == 0
        lines = out.splitlines()
        assert lines[3].startswith(" 3 |           3 | 3")
        assert lines[6].startswith(" 6 |           3 | 3")
        assert "Z coefficients: [1, 0, 0, 1, 0, 0, 1]" in out

    def test_equal_weights_loop(self, write, capsys):
        code, out = run(capsys, "series", write(LOOP_EQUAL), "--order", "4")
        assert code == 0
        assert "Z coefficients: [1, 0, 0, 0, 0]" in out

    def test_k4_triangle_count(self, write, capsys, tmp_path):
        code, sym = run(capsys, "symmetrize", write(K4_GRAPH, "k4.g"))
        dg_path = tmp_path / "k4.dg"
        dg_path.write_text(sym)
        code, out = run(capsys, "series", str(dg_path), "--preset", "ihara", "--order", "3")
        assert code == 0
        assert " 3 |          24 | 24" in out


class TestPrimes:
    def test_three_cycle(self, write, capsys):
        code, out = run(capsys, "primes", write(THREE_CYCLE), "--max-len", "6")
        assert code == 0
        assert "period 3: x y z" in out
        assert out.count("period") >= 1
        assert "EULER == HASHIMOTO up to t^6: OK" in out

    def test_loop(self, write, capsys):
        code, out = run(capsys, "primes", write(LOOP_32), "--max-len", "4")
        assert code == 0
        assert "period 1: l  circ = 3/2" in out

    def test_worked_example_verdict(self, write, capsys):
        code, out = run(capsys, "primes", write(WORKED_EXAMPLE), "--preset", "ihara", "--max-len", "5")
        assert code == 0
        assert "EULER == HASHIMOTO up to t^5: OK" in out


class TestVerify:
    def test_file_battery(self, write, capsys):
        code, out = run(capsys, "verify", write(WORKED_EXAMPLE), "--preset", "ihara")
        assert code == 0
        assert out.count("PASS") == 5
        assert "all checks passed" in out

    def test_random_battery(self, write, capsys):
        code, out = run(capsys, "verify", "--random", "--trials", "5", "--seed", "7")
        assert code == 0
        assert "5/5 PASS" in out

    def test_random_is_reproducible(self, capsys):
        _, first = run(capsys, "verify", "--random", "--trials", "3", "--seed", "11")
        _, second = run(capsys, "verify", "--random", "--trials", "3", "--seed", "11")
        assert first == second

    def test_verify_without_file_or_random(self, capsys):
        code = main(["verify"])
        captured = capsys.readouterr()
        assert code == 2
        assert "needs a file or --random" in captured.err


class TestSymmetrize:
    def test_k4(self, write, capsys):
        code, out = run(capsys, "symmetrize", write(K4_GRAPH, "k4.g"))
        assert code == 0
        assert out.count("\narc ") == 12
        assert out.count("\ninverse ") == 6

    def test_loop_is_implicitly_self_inverse(self, write, capsys):
        code, out = run(capsys, "symmetrize", write("vertices 1\nedge 1 1\n", "loop.g"))
        assert code == 0
        assert "arc e1 1 1" in out
        assert "inverse" not in out

    def test_path_graph(self, write, capsys):
        code, out = run(capsys, "symmetrize", write("vertices 3\nedge 1 2\nedge 2 3\n", "p.g"))
        assert code == 0
        assert out.count("\narc ") == 4
        assert out.count("\ninverse ") == 2


class TestErrorsAndDeterminism:
    def test_parse_error_exit_code(self, write, capsys):
        code = main(["info", write("vertices 2\narc a 1 5\n")])
        captured = capsys.readouterr()
        assert code == 2
        assert "error:" in captured.err

    def test_missing_file(self, capsys):
        code = main(["info", "/nonexistent/file.dg"])
        captured = capsys.readouterr()
        assert code == 2

    def test_byte_identical_output(self, write, capsys):
        path = write(WORKED_EXAMPLE)
        outputs = set()
        for _ in range(2):
            _, out = run(capsys, "info", path, "--machine")
            outputs.add(out)
        assert len(outputs) == 1

    def test_zeta_machine_mode(self, write, capsys):
        code, out = run(capsys, "zeta", write(THREE_CYCLE), "--machine")
        assert code == 0
        assert "hashimoto.den=1 - t^3" in out
        assert "main_theorem=ok" in out
