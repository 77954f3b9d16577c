"""Smoke tests for the python bindings.

Runs standalone (python smoke_test.py) or under pytest.
"""

import math

import twophoton as tp


def test_spectral_amplitude():
    amp = tp.SpectralAmplitude(8.95, 0.02)
    peak = amp.evaluate(8.95)
    assert abs(peak.real - (2 * math.pi * 0.02**2) ** -0.25) < 1e-12
    assert abs(amp.position_width() - 1.0 / 0.04) < 1e-12

    kernel = tp.OverlapKernel.degenerate(amp, 17.9)
    assert tp.suppression_ratio(kernel, 0.0) == 1.0
    got = tp.suppression_ratio(kernel, 5.0 / 0.02)
    assert abs(got - math.exp(-12.5)) < 1e-8 * got
    assert tp.suppression_ratio(kernel, 630000.0) == 0.0


def test_fields_average():
    d1, d2 = tp.build_eraser_fields(math.pi / 2)
    analytic = tp.average_over_delta(d1, d2)
    assert abs(analytic.value - 1.0) < 1e-12
    mc = tp.average_over_delta_monte_carlo(d1, d2, 100000, 42)
    assert abs(mc.value - analytic.value) <= 5 * mc.std_error


def test_conversion_rule():
    poly = tp.IntensityPoly()
    poly.add("AA", 1.0, "const")
    poly.add("BB", 1.0, "const")
    poly.add("AB", 2.0, "const")
    poly.add("AB", 2.0, "fringe")
    assert abs(tp.visibility_of(poly, "fringe", ["const"]) - 0.5) < 1e-12
    converted = tp.apply_conversion_rule(poly)
    assert abs(tp.visibility_of(converted, "fringe", ["const"]) - 1.0) < 1e-12
    assert converted.coefficient("AA") == 0.0


def test_eraser_models():
    cfg = tp.EraserConfig()
    cfg.phi = math.pi / 2
    assert abs(tp.eraser_coincidence(cfg, tp.Model.QuantumReference) - 0.5) < 1e-12
    assert abs(tp.eraser_coincidence(cfg, tp.Model.Classical) - 1.0) < 1e-12
    cfg.theta1 = 0.0
    cfg.theta2 = math.pi / 2
    assert abs(tp.eraser_coincidence(cfg, tp.Model.QuantumReference) - 0.25) < 1e-12


def test_ghosh_mandel_scan():
    cfg = tp.GhoshMandelConfig()
    scan = tp.scan_ghosh_mandel(cfg, 0.0, 2.0, 64)
    assert abs(scan.visibility("quantum") - 1.0) < 1e-9
    assert abs(scan.visibility("classical") - 0.5) < 1e-9
    assert abs(scan.visibility("converted") - 1.0) < 1e-9
    csv = tp.format_csv(scan)
    assert csv.splitlines()[0] == "param,classical,converted,quantum"


def test_franson_scan():
    sigma = 0.02
    cfg = tp.FransonConfig(40.0 / sigma, 18.0, tp.SpectralAmplitude(9.0, sigma))
    scan = tp.fringe_scan(cfg, tp.FringeModels(), 2.0, 256)
    assert abs(scan.visibility("narrow") - 1.0) < 1e-6
    assert abs(scan.visibility("wide") - 0.5) < 1e-6
    assert abs(scan.visibility("classical") - 0.5) < 1e-6
    amps = tp.amplitudes(cfg)
    assert abs(abs(amps.ll) - abs(amps.ss)) <= 1e-14 * abs(amps.ss)


def test_errors_translate():
    try:
        tp.SpectralAmplitude(-1.0, 0.1)
    except tp.ConfigError:
        pass
    else:
        raise AssertionError("expected ConfigError")
    sigma = 0.02
    shallow = tp.FransonConfig(10.0 / sigma, 18.0, tp.SpectralAmplitude(9.0, sigma))
    try:
        tp.coincidence_narrow(shallow)
    except tp.NumericalError:
        pass
    else:
        raise AssertionError("expected NumericalError")


if __name__ == "__main__":
    passed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok {name}")
            passed += 1
    print(f"python smoke: {passed} tests passed")
