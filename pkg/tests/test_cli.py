import pytest

from tweetsift.cli import main


@pytest.fixture(scope="module")
def workspace(tmp_path_factory):
    """A synthetic corpus with labels plus a calibrated box, built via the CLI."""
    tmp = tmp_path_factory.mktemp("cli")
    corpus = tmp / "corpus.txt"
    account_labels = tmp / "accounts.tsv"
    box = tmp / "box.tsv"
    rc = main(
        [
            "synth",
            "--kind",
            "mixed",
            "--accounts",
            "60",
            "--tweets",
            "30",
            "--seed",
            "77",
            "--out",
            str(corpus),
            "--account-labels-out",
            str(account_labels),
        ]
    )
    assert rc == 0
    rc = main(
        [
            "calibrate",
            "--corpus",
            str(corpus),
            "--account-labels",
            str(account_labels),
            "--fpr-budget",
            "0.13",
            "--out",
            str(box),
        ]
    )
    assert rc == 0
    return tmp, corpus, account_labels, box


def run_classify(workspace, suffix):
    tmp, corpus, _, box = workspace
    labels = tmp / f"labels{suffix}.tsv"
    report = tmp / f"report{suffix}.tsv"
    rc = main(
        [
            "classify",
            "--corpus",
            str(corpus),
            "--box",
            str(box),
            "--labels-out",
            str(labels),
            "--report-out",
            str(report),
        ]
    )
    assert rc == 0
    return labels, report


def test_synth_writes_parseable_corpus(workspace):
    _, corpus, account_labels, _ = workspace
    from tweetsift.corpus import read_corpus

    records, errors = read_corpus(corpus)
    assert not errors
    assert len(records) == 60 * 30
    header = account_labels.read_text().splitlines()[0]
    assert header == "account_id\tlabel"


def test_classify_outputs(workspace):
    labels, report = run_classify(workspace, "")
    lines = labels.read_text().splitlines()
    assert lines[0] == "tweet_id\tlabel"
    assert len(lines) == 1 + 1800
    assert report.read_text().startswith("# tweet labels by local-time year")


def test_classify_then_topics_deterministic(workspace):
    tmp, corpus, _, box = workspace
    labels1, report1 = run_classify(workspace, "_a")
    labels2, report2 = run_classify(workspace, "_b")
    assert labels1.read_bytes() == labels2.read_bytes()
    assert report1.read_bytes() == report2.read_bytes()

    outs = []
    for suffix in ("_a", "_b"):
        out = tmp / f"tallies{suffix}.tsv"
        rc = main(
            ["topics", "--corpus", str(corpus), "--labels", str(labels1), "--out", str(out)]
        )
        assert rc == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_topics_table_shape(workspace):
    tmp, corpus, _, _ = workspace
    labels, _ = run_classify(workspace, "_t")
    out = tmp / "tallies.tsv"
    assert main(["topics", "--corpus", str(corpus), "--labels", str(labels), "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "subcategory\tcount\tpercentage\timpressions\tyear"
    names = {line.split("\t")[0] for line in lines[1:]}
    assert names == {"commercial", "cessation", "discount", "flavor"}


def test_sample_deterministic_and_sized(workspace):
    tmp, corpus, _, _ = workspace
    labels, _ = run_classify(workspace, "_s")
    out1, out2 = tmp / "sample1.tsv", tmp / "sample2.tsv"
    for out in (out1, out2):
        rc = main(
            [
                "sample",
                "--corpus",
                str(corpus),
                "--labels",
                str(labels),
                "--topic",
                "cessation",
                "--n",
                "10",
                "--seed",
                "4",
                "--out",
                str(out),
            ]
        )
        assert rc == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert len(out1.read_text().splitlines()) == 11


def test_hedonometer_series(workspace, tmp_path):
    _, corpus, _, _ = workspace
    out = tmp_path / "series.tsv"
    from importlib import resources

    lexicon = resources.files("tweetsift.data").joinpath("sample_lexicon.tsv")
    rc = main(
        [
            "hedonometer",
            "--corpus",
            str(corpus),
            "--lexicon",
            str(lexicon),
            "--bin",
            "month",
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "bin\thappiness\tmatched_count\ttweet_count"
    assert len(lines) > 1


def test_shift_table(workspace, tmp_path):
    tmp, corpus, _, _ = workspace
    from importlib import resources

    lexicon = resources.files("tweetsift.data").joinpath("sample_lexicon.tsv")
    out = tmp_path / "shift.tsv"
    rc = main(
        [
            "shift",
            "--ref-corpus",
            str(corpus),
            "--comp-corpus",
            str(corpus),
            "--lexicon",
            str(lexicon),
            "--top-k",
            "10",
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("rank\tword")
    for line in lines[1:]:
        assert float(line.split("\t")[5]) == 0.0  # identical corpora shift nothing


def test_error_paths_return_nonzero(tmp_path, capsys):
    rc = main(["classify", "--corpus", str(tmp_path / "missing.txt"), "--box", "nope.tsv"])
    assert rc == 1
    assert "error" in capsys.readouterr().err

    bad_labels = tmp_path / "bad.tsv"
    bad_labels.write_text("wrong\theader\n")
    corpus = tmp_path / "c.txt"
    corpus.write_text("")
    rc = main(["topics", "--corpus", str(corpus), "--labels", str(bad_labels)])
    assert rc == 1


def test_unknown_topic_errors(workspace, capsys):
    tmp, corpus, _, _ = workspace
    labels, _ = run_classify(workspace, "_u")
    rc = main(
        ["sample", "--corpus", str(corpus), "--labels", str(labels), "--topic", "nonsense"]
    )
    assert rc == 1
    assert "unknown topic" in capsys.readouterr().err
