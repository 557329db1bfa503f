"""Runs the geomon CLI and validates its JSON documents against schemas/.

usage: validate_schemas.py <geomon binary> <schemas dir> <data dir> <work dir>
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    registry = Registry()
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
        schemas[path.name] = doc
    return schemas, registry


def run(binary, *args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode != 0:
        raise SystemExit(f"{' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    return proc.stdout


def main():
    binary, schema_dir, data_dir, work = sys.argv[1:5]
    schema_dir, data_dir, work = pathlib.Path(schema_dir), pathlib.Path(data_dir), pathlib.Path(work)
    work.mkdir(parents=True, exist_ok=True)
    schemas, registry = load_registry(schema_dir)

    def validator(name):
        return jsonschema.Draft202012Validator(schemas[name], registry=registry)

    documents = []
    for name in ["c4.edges", "k4.edges", "k13.edges", "p5.edges", "c5_pendant.edges", "petersen.edges"]:
        documents.append(("result.schema.json", name, json.loads(run(binary, "compute", str(data_dir / name), "--json"))))
    single = json.loads(run(binary, "compute", str(data_dir / "c4.edges"), "--params", "seg", "--json"))
    documents.append(("result.schema.json", "c4 seg only", single))

    for quad in [("2", "3", "4", "5"), ("2", "4", "4", "4"), ("4", "5", "6", "7"), ("2", "2", "3", "5")]:
        out = work / f"construct_{'_'.join(quad)}.json"
        run(binary, "construct", *quad, "--format", "json", "--out", str(out))
        documents.append(("construction.schema.json", " ".join(quad), json.loads(out.read_text())))
    unverified = json.loads(run(binary, "construct", "3", "3", "3", "3", "--format", "json", "--no-verify"))
    documents.append(("construction.schema.json", "3 3 3 3 --no-verify", unverified))

    sweep_path = work / "sweep.json"
    run(binary, "sweep", "--max-d", "5", "--quiet", "--json", str(sweep_path))
    documents.append(("sweep.schema.json", "sweep --max-d 5", json.loads(sweep_path.read_text())))

    lemma_path = work / "lemmas.json"
    run(binary, "enumerate", "--vertices", "4", "--lemmas", "--json", str(lemma_path))
    documents.append(("lemma-report.schema.json", "enumerate 4", json.loads(lemma_path.read_text())))

    failures = 0
    for schema, what, doc in documents:
        errors = sorted(validator(schema).iter_errors(doc), key=lambda e: list(e.path))
        for err in errors:
            print(f"FAIL {schema} {what}: {'/'.join(map(str, err.path))}: {err.message}")
        failures += len(errors)
        if not errors:
            print(f"ok   {schema} {what}")

    # The schemas must also reject malformed documents.
    broken = json.loads(json.dumps(documents[0][2]))
    broken["parameters"]["gg"] = 3
    if validator("result.schema.json").is_valid(broken):
        print("FAIL result schema accepted an unknown parameter")
        failures += 1

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
