import mfcarc


def test_chain_solve():
    inst = mfcarc.read_instance("3 2 1\n1 2\n2 3\n1 2\n")
    rep = mfcarc.solve(inst)
    assert rep.status == "optimal"
    assert rep.objective == -8
    assert rep.covered == 3 and rep.paths == 1
    assert rep.witness == [[1, 2, 3]]
    assert rep.bound == -8


def test_generate_and_roundtrip(tmp_path):
    inst = mfcarc.gen_set_a(12, 0.5, 0.3, 7)
    text = mfcarc.write_instance(inst)
    assert mfcarc.write_instance(mfcarc.read_instance(text)) == text
    p = tmp_path / "inst.txt"
    mfcarc.save_instance(inst, str(p))
    assert mfcarc.write_instance(mfcarc.load_instance(str(p))) == text
    s = mfcarc.stats(inst)
    assert 0 <= s["density"] <= 100


def test_solver_matches_enumeration():
    for seed in range(5):
        inst = mfcarc.gen_set_a(7, 0.5, 0.4, seed)
        best = mfcarc.enumerate_best(inst)
        rep = mfcarc.solve(inst, cuts="agrc")
        assert rep.objective == best["cost"]
        assert rep.covered == best["covered"] and rep.paths == best["paths"]


def test_metrics_and_kv():
    assert mfcarc.best_gap(-8, -10) == 20.0
    assert mfcarc.best_gap(-8, 0) is None
    assert mfcarc.decode_cost(-299, 100) == (3, 1)
    assert mfcarc.evaluate_cover([[1, 2, 3]], 100) == -299
    kv = mfcarc.solve(mfcarc.gen_set_a(6, 0.5, 0.3, 1)).to_kv()
    assert "status=" in kv and "root-lp=" in kv


def test_instance_class():
    inst = mfcarc.Instance(3, [(1, 2), (2, 3)], [(1, 2)])
    assert inst.n == 3
    assert inst.arcs == [(1, 2), (2, 3)]
    assert inst.mandatory == [(1, 2)]
    rep = mfcarc.solve(inst, cuts="ipc")
    assert rep.objective == -8
