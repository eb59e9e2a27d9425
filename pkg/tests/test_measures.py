import json
import math

import numpy as np
import pytest

from extgauss import extremal as ex
from extgauss import measures as ms
from extgauss import quadrature as qd
from extgauss import special_fns as sf
from extgauss.extremal import Kind, Parity

PI = math.pi


class TestAdmissibility:
    def test_single_atom_nu1(self):
        m = ms.MeasureRep(atoms=((1.0, 1.0),))
        status, value = ms.check_admissible(m, ms.NU1)
        assert status is True
        assert value == pytest.approx(0.5, abs=1e-16)

    def test_single_atom_nu2(self):
        m = ms.MeasureRep(atoms=((1.0, 1.0),))
        status, value = ms.check_admissible(m, ms.NU2)
        assert status is True
        assert value == pytest.approx(1.0, abs=1e-16)

    def test_unknown_condition(self):
        with pytest.raises(ValueError):
            ms.check_admissible(ms.MeasureRep(atoms=((1.0, 1.0),)), "nu3")

    def test_flagged_density_is_indeterminate(self):
        nodes = np.geomspace(0.1, 10.0, 33)
        d = ms.Density("table", nodes, np.ones_like(nodes))
        d.flagged[4] = True
        m = ms.MeasureRep(atoms=(), density=d)
        status, _ = ms.check_admissible(m, ms.NU2)
        assert status is None
        with pytest.raises(ms.AdmissibilityError):
            ms.eval_integrated(Kind.MAJORANT, ms.IntegratedTarget(m), 0.3)

    def test_validation(self):
        with pytest.raises(sf.DomainError):
            ms.MeasureRep(atoms=((0.0, 1.0),))
        with pytest.raises(sf.DomainError):
            ms.MeasureRep(atoms=((1.0, -0.5),))
        with pytest.raises(sf.DomainError):
            ms.Density("table", np.array([2.0, 1.0]), np.array([1.0, 1.0]))


class TestPointMassReduction:
    @pytest.mark.parametrize("lam0", [0.5, 1.0, 2.0])
    def test_eval_g(self, lam0):
        t = ms.IntegratedTarget(ms.MeasureRep(atoms=((lam0, 1.0),)), Parity.TRUNCATED)
        xs = np.array([-1.0, 0.0, 0.5, 2.0])
        assert np.max(np.abs(ms.eval_g(t, xs) - sf.truncated_gaussian(lam0, xs))) < 1e-15

    def test_eval_integrated_matches_single(self):
        t = ms.IntegratedTarget(ms.MeasureRep(atoms=((1.0, 1.0),)), Parity.TRUNCATED)
        assert ms.eval_integrated(Kind.BEST, t, 0.3) == pytest.approx(
            ex.eval_best_truncated(1.0, 0.3), abs=1e-12
        )

    @pytest.mark.parametrize("kind", list(Kind))
    def test_integrated_error_matches_single(self, kind):
        m = ms.MeasureRep(atoms=((1.0, 1.0),))
        assert ms.integrated_error(kind, m) == pytest.approx(
            ex.error_truncated(kind, 1.0).value, abs=1e-12
        )


class TestTwoAtoms:
    def setup_method(self):
        self.m = ms.MeasureRep(atoms=((1.0, 0.3), (2.0, 0.7)))
        self.t = ms.IntegratedTarget(self.m, Parity.TRUNCATED)

    def test_g_at_zero_is_half_mass(self):
        assert ms.eval_g(self.t, 0.0) == pytest.approx(0.5, abs=1e-16)

    def test_interpolation_inherited(self):
        for n in (1.0, 2.0):
            assert ms.eval_integrated(Kind.MINORANT, self.t, n) == pytest.approx(
                ms.eval_g(self.t, n), abs=1e-12
            )

    def test_sandwich_inherited(self):
        m = ms.MeasureRep(atoms=((0.5, 1.0), (2.0, 1.0)))
        t = ms.IntegratedTarget(m, Parity.TRUNCATED)
        xs = np.linspace(-4.0, 4.0, 161)
        g = ms.eval_g(t, xs)
        assert np.min(g - ms.eval_integrated(Kind.MINORANT, t, xs)) >= -1e-10
        assert np.min(ms.eval_integrated(Kind.MAJORANT, t, xs) - g) >= -1e-10

    def test_error_linearity(self):
        a, b = 0.25, 0.75
        m = ms.MeasureRep(atoms=((1.0, a), (4.0, b)))
        for kind in Kind:
            combo = ms.integrated_error(kind, m)
            parts = (
                a * ex.error_truncated(kind, 1.0).value
                + b * ex.error_truncated(kind, 4.0).value
            )
            assert combo == pytest.approx(parts, abs=1e-13)

    def test_integrated_l1_identity(self):
        # direct L1 distance between g and the integrated best approximant
        # against the measure integral of the per-parameter optimal errors
        m = ms.MeasureRep(atoms=((1.0, 0.5), (2.0, 0.5)))
        t = ms.IntegratedTarget(m, Parity.TRUNCATED)
        tails = [ex.l1_tail(Kind.BEST, lam, 60) for lam, _ in m.atoms]
        tail = 0.5 * tails[0][0] + 0.5 * tails[1][0]
        terr = 0.5 * tails[0][1] + 0.5 * tails[1][1]
        r = qd.l1_distance(
            lambda x: ms.eval_g(t, x),
            lambda x: ms.eval_integrated(Kind.BEST, t, x),
            1e-8,
            window=60.0,
            tail=tail,
            tail_error=terr,
        )
        assert abs(r.value - ms.integrated_error(Kind.BEST, m)) < 1e-5


class TestTableDensity:
    def test_exponential_density_closed_form(self):
        # density e^(-lam) integrates the Gaussians to 1/(1 + pi x^2)
        nodes = np.geomspace(1e-6, 40.0, 2001)
        d = ms.Density("table", nodes, np.exp(-nodes))
        t = ms.IntegratedTarget(ms.MeasureRep(atoms=(), density=d), Parity.TRUNCATED)
        for x in (0.5, 1.0, 2.0):
            assert ms.eval_g(t, x) == pytest.approx(1.0 / (1.0 + PI * x * x), abs=1e-6)
        status, mass = ms.check_admissible(ms.MeasureRep(atoms=(), density=d), ms.NU2)
        assert status is True
        assert mass == pytest.approx(1.0, abs=1e-5)


class TestArctanExample:
    def test_weight_matches_dawson_form(self):
        # derived form of the density through the Gaussian sine moments
        for lam in (0.01, 0.3, 1.0, 10.0):
            d = sf.dawson(math.sqrt(PI * lam))
            closed = d / (math.sqrt(PI) * lam) - lam**-0.5 + 2.0 * math.sqrt(PI) * d
            assert ms._arctan_weight(lam) == pytest.approx(closed, rel=1e-9)

    def test_mass_finite(self, arctan_small):
        status, mass = ms.check_admissible(arctan_small, ms.NU2)
        assert status is True
        assert math.isfinite(mass)
        # the full mass is pi/2; the sampling window clips a small right tail
        assert abs(mass - PI / 2.0) < 0.01

    def test_target_values(self, arctan_small):
        t = ms.IntegratedTarget(arctan_small, Parity.ODD)
        for x in (0.5, 1.0, 2.0):
            ref = math.atan(1.0 / x) - x / (1.0 + x * x)
            assert ms.eval_g(t, x) == pytest.approx(ref, abs=1e-4)

    def test_value_at_one(self, arctan_small):
        t = ms.IntegratedTarget(arctan_small, Parity.ODD)
        assert ms.eval_g(t, 1.0) == pytest.approx(PI / 4.0 - 0.5, abs=1e-4)

    def test_tail_decay(self, arctan_small):
        t = ms.IntegratedTarget(arctan_small, Parity.ODD)
        g5, g10 = ms.eval_g(t, 5.0), ms.eval_g(t, 10.0)
        assert g5 > g10 > 0.0


class TestMeasureFiles:
    def test_round_trip(self, tmp_path):
        m = ms.MeasureRep(
            atoms=((1.0, 0.25), (4.0, 0.75)),
            density=ms.Density("table", np.geomspace(0.1, 10.0, 33), np.ones(33)),
        )
        p = tmp_path / "m.json"
        ms.save_measure(m, p)
        back = ms.load_measure(p)
        assert back.atoms == m.atoms
        assert np.allclose(back.density.nodes, m.density.nodes)
        assert np.allclose(back.density.values, m.density.values)

    def test_dict_schema_fields(self):
        m = ms.MeasureRep(atoms=((2.0, 1.0),))
        d = ms.measure_to_dict(m)
        assert d == {"atoms": [[2.0, 1.0]]}

    def test_arctan_kind_with_explicit_nodes(self):
        spec = {
            "atoms": [],
            "density": {"kind": "arctan", "nodes": list(np.geomspace(0.05, 20.0, 9))},
        }
        m = ms.measure_from_dict(spec)
        assert m.density.kind == "arctan"
        assert np.all(m.density.values >= 0.0)

    def test_unknown_density_kind(self):
        with pytest.raises(sf.DomainError):
            ms.measure_from_dict({"density": {"kind": "mystery", "nodes": [1], "weights": [1]}})

    def test_atoms_only_file(self, tmp_path):
        p = tmp_path / "atoms.json"
        p.write_text(json.dumps({"atoms": [[1.0, 0.5]]}))
        m = ms.load_measure(p)
        assert m.atoms == ((1.0, 0.5),)
        assert m.density is None
