"""End-to-end checks of the leibcoh command line: exit codes, pipes, schema
conformance, determinism and agreement between text and JSON reports.

usage: cli_test.py <leibcoh binary> <source dir>
"""
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = None
SCHEMA = None
SOURCE = None


def run(args, stdin=None, fmt=None):
    cmd = [BINARY] + (["--format", fmt] if fmt else []) + args
    p = subprocess.run(cmd, input=stdin, capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


def catalog(*args):
    code, out, err = run(["catalog"] + [str(a) for a in args])
    assert code == 0, err
    return out


def report(args, stdin):
    code, out, err = run(args, stdin)
    assert code == 0, f"{args}: exit {code}: {err}"
    doc = json.loads(out)
    SCHEMA.validate(doc)
    return doc


def scalar_leaves(doc, prefix=""):
    """Dotted paths of every scalar not nested inside an array."""
    if isinstance(doc, dict):
        for k, v in doc.items():
            yield from scalar_leaves(v, f"{prefix}{k}.")
    elif not isinstance(doc, list):
        yield prefix[:-1], doc


def text_value(v):
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


ALGEBRAS = [("abelian", 3), ("heisenberg", 1), ("heisenberg", 2), ("diamond_x",), ("diamond_e",), ("g54",),
            ("gl", 2), ("sl2",), ("sl2_plus_abelian", 2)]


class Pipes(unittest.TestCase):
    def test_diamond_hl2(self):
        doc = report(["cohomology", "--coeff", "adjoint", "--deg", "2", "--leibniz"], catalog("diamond_e"))
        self.assertEqual(doc["cohomology"]["hl2_dim"], 4)

    def test_g54_koszul(self):
        k = report(["koszul"], catalog("g54"))["koszul"]
        self.assertFalse(k["is_I_null"])
        self.assertFalse(k["trivial_uncoupling"])
        self.assertEqual(k["im_I_dim"], 1)

    def test_abelian_everything_is_a_cocycle(self):
        doc = report(["cohomology", "--coeff", "trivial", "--deg", "2", "--leibniz"], catalog("abelian", 3))
        self.assertEqual(doc["cohomology"]["zl2_dim"], 9)

    def test_specialize_feeds_validate(self):
        code, out, err = run(["specialize", "--at", "lambda=1,mu=-1"], catalog("d_lambda_mu"))
        self.assertEqual(code, 0, err)
        self.assertEqual(json.loads(out), json.loads(catalog("diamond_e")))
        self.assertTrue(report(["validate"], out)["algebra"]["satisfies_kind"])


class Data(unittest.TestCase):
    def test_documents_match_the_catalog(self):
        for name in ("diamond_e", "diamond_versal", "g54"):
            with open(os.path.join(SOURCE, "data", name + ".json")) as f:
                self.assertEqual(json.load(f), json.loads(catalog(name)), name)

    def test_diamond_ledger_from_the_cochain_document(self):
        with open(os.path.join(SOURCE, "data", "diamond_e.json")) as f:
            doc = f.read()
        phi = os.path.join(SOURCE, "data", "diamond_phi.json")
        m = report(["massey", "--order", "3", "--cochains", phi], doc)["massey"]
        verdicts = {e["monomial"]: e["verdict"] for e in m["entries"]}
        self.assertEqual(len(verdicts), 30)
        self.assertEqual([verdicts[k] for k in ("t^2", "s^2", "w^2")], ["zero"] * 3)
        self.assertEqual([verdicts[k] for k in ("u^2", "t*u", "t*w", "u*w", "s*t")], ["nontrivial"] * 5)
        self.assertEqual([verdicts[k] for k in ("s*u", "s*w")], ["coboundary"] * 2)


class Schema(unittest.TestCase):
    def test_every_command_conforms(self):
        for spec in ALGEBRAS:
            doc = catalog(*spec)
            with self.subTest(algebra=spec):
                report(["validate"], doc)
                report(["koszul"], doc)
                for coeff in ("adjoint", "trivial"):
                    report(["decompose", "--coeff", coeff], doc)
                    for deg in ("1", "2"):
                        report(["cohomology", "--coeff", coeff, "--deg", deg, "--reps"], doc)
                        report(["cohomology", "--coeff", coeff, "--deg", deg, "--lie", "--reps"], doc)
        report(["massey", "--order", "3", "--witnesses"], catalog("diamond_e"))
        code, out, _ = run(["versal", "--ideal", "t*u,t*w,u*w"], catalog("diamond_versal"))
        self.assertEqual(code, 2)
        SCHEMA.validate(json.loads(out))
        ideal = "s*t,s*u,s*w,u^2,t*u,t*w,u*w"
        self.assertTrue(report(["versal", "--ideal", ideal], catalog("diamond_versal"))["versal"]["ok"])
        for n in range(1, 6):
            code, out, _ = run(["symbolic"], catalog("g54_family", n))
            SCHEMA.validate(json.loads(out))
            self.assertEqual(code, 2 if n == 4 else 0, f"family {n}")

    def test_round_trip_validates_identically(self):
        for spec in ALGEBRAS:
            doc = catalog(*spec)
            again = catalog(*spec)
            self.assertEqual(doc, again)
            first = report(["validate"], doc)
            second = report(["validate"], json.dumps(json.loads(doc)))
            self.assertEqual(first, second)


class Output(unittest.TestCase):
    def test_text_has_the_same_numbers(self):
        for spec, args in [(s, a) for s in (("g54",), ("sl2",)) for a in
                           (["cohomology", "--deg", "2"], ["koszul"], ["decompose", "--coeff", "trivial"], ["validate"])]:
            doc = catalog(*spec)
            code, js, _ = run(args, doc)
            code2, text, _ = run(args, doc, fmt="text")
            self.assertEqual((code, code2), (0, 0))
            lines = set(text.splitlines())
            for path, value in scalar_leaves(json.loads(js)):
                self.assertIn(f"{path}: {text_value(value)}", lines, f"{args} {path}")

    def test_byte_deterministic(self):
        doc = catalog("diamond_e")
        for args in (["massey", "--order", "3", "--witnesses"], ["decompose"], ["cohomology", "--deg", "2", "--reps"]):
            a = run(args, doc)
            b = run(args, doc)
            self.assertEqual(a, b)

    def test_out_writes_the_report(self):
        doc = catalog("g54")
        _, expected, _ = run(["koszul"], doc)
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "r.json")
            code, out, err = run(["--out", path, "koszul"], doc)
            self.assertEqual(code, 0, err)
            self.assertEqual(out, "")
            with open(path) as f:
                self.assertEqual(f.read(), expected)


class ExitCodes(unittest.TestCase):
    def test_unknown_catalog_name_lists_options(self):
        code, _, err = run(["catalog", "nope"])
        self.assertEqual(code, 1)
        self.assertIn("diamond_e", err)

    def test_parse_error_names_line(self):
        code, _, err = run(["validate"], '{\n  "dim": 2,\n  "kind": lie\n}')
        self.assertEqual(code, 1)
        self.assertIn(":3:", err)

    def test_field_error_names_field(self):
        code, _, err = run(["validate"], '{"dim": 2, "kind": "lie", "basis": ["a"], "brackets": []}')
        self.assertEqual(code, 1)
        self.assertIn("basis", err)

    def test_bad_flag_is_a_usage_error(self):
        code, _, _ = run(["cohomology", "--deg", "9"], catalog("sl2"))
        self.assertEqual(code, 1)

    def test_validation_failure(self):
        broken = {"dim": 3, "kind": "lie", "basis": ["a", "b", "c"],
                  "brackets": [{"left": "a", "right": "b", "value": [{"basis": "c", "coeff": "1"}]}]}
        code, out, _ = run(["validate"], json.dumps(broken))
        self.assertEqual(code, 2)
        doc = json.loads(out)
        SCHEMA.validate(doc)
        self.assertFalse(doc["algebra"]["is_antisymmetric"])
        code, _, _ = run(["cohomology", "--deg", "2"], json.dumps(broken))
        self.assertEqual(code, 2)

    def test_degree_guard(self):
        code, _, err = run(["cohomology", "--deg", "3"], catalog("heisenberg", 5))
        self.assertEqual(code, 1)
        self.assertIn("--force", err)


if __name__ == "__main__":
    BINARY = sys.argv[1]
    SOURCE = sys.argv[2]
    with open(os.path.join(sys.argv[2], "schema", "report.schema.json")) as f:
        SCHEMA = jsonschema.Draft202012Validator(json.load(f))
    unittest.main(argv=sys.argv[:1], verbosity=2)
