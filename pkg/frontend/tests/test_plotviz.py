"""plotviz unit tests against synthetic artifacts built from the format spec."""

import numpy as np
import pytest

from plotviz import ParseError, PlotJob, read_csv_table, read_dump, render
from plotviz.cli import main

FIELDS = 11


def make_dump(path, nx=6, ny=4, problem="orszag_tang", variant="lcd-pccu",
              xmin=0.0, xmax=2 * np.pi, ymin=0.0, ymax=2 * np.pi, time=4.0):
    rng = np.random.default_rng(nx * ny)
    data = rng.standard_normal((nx, ny, FIELDS))
    header = (f"MHDCU-DUMP 1 problem={problem} variant={variant} nx={nx} ny={ny} "
              f"xmin={xmin!r} xmax={xmax!r} ymin={ymin!r} ymax={ymax!r} "
              f"time={time!r} gamma={5 / 3!r}\n")
    with open(path, "wb") as fh:
        fh.write(header.encode())
        fh.write(data.astype("<f8").tobytes())
    return data


def test_read_dump_and_variables(tmp_path):
    path = tmp_path / "f.dump"
    data = make_dump(path)
    dump = read_dump(path)
    assert (dump.nx, dump.ny) == (6, 4)
    assert dump.problem == "orszag_tang" and dump.time == 4.0
    np.testing.assert_array_equal(dump.data, data)
    np.testing.assert_allclose(dump.variable("speed"),
                               np.sqrt((data[..., 1:4] ** 2).sum(-1)))
    np.testing.assert_allclose(dump.variable("magp"),
                               0.5 * (data[..., 5:8] ** 2).sum(-1))
    with pytest.raises(KeyError):
        dump.variable("entropy")
    x, y = dump.cell_centers()
    assert x.size == 6 and y.size == 4
    assert x[0] == pytest.approx(dump.xmin + 0.5 * (dump.xmax - dump.xmin) / 6)


def test_parse_errors_carry_offsets(tmp_path):
    bad = tmp_path / "bad"
    bad.write_bytes(b"WRONG 1\n" + b"\x00" * 8)
    with pytest.raises(ParseError) as err:
        read_dump(bad)
    assert err.value.offset == 0
    truncated = tmp_path / "trunc"
    data = make_dump(tmp_path / "ok.dump")
    blob = (tmp_path / "ok.dump").read_bytes()
    truncated.write_bytes(blob[:-8])
    with pytest.raises(ParseError) as err:
        read_dump(truncated)
    assert "payload" in str(err.value)


def test_map_figure(tmp_path):
    path = tmp_path / "f.dump"
    make_dump(path)
    out = render(PlotJob(kind="map", inputs=[str(path)], variable="magp",
                         output=str(tmp_path / "m.png")))
    blob = open(out, "rb").read()
    assert blob[:8] == b"\x89PNG\r\n\x1a\n" and len(blob) > 2000


def _write_slice_csv(path, var="rho"):
    x = np.linspace(0, 1, 12)
    with open(path, "w") as fh:
        fh.write(f"x,{var},p\n")
        for xi in x:
            fh.write(f"{float(xi)!r},{float(np.sin(xi))!r},{float(np.cos(xi))!r}\n")


def test_slice_overlay(tmp_path):
    paths = []
    for i in range(3):
        p = tmp_path / f"s{i}.csv"
        _write_slice_csv(p)
        paths.append(str(p))
    out = render(PlotJob(kind="slice", inputs=paths, variable="rho",
                         labels=["a", "b", "c"], output=str(tmp_path / "s.png")))
    assert open(out, "rb").read()[:4] == b"\x89PNG"
    with pytest.raises(ValueError):
        render(PlotJob(kind="slice", inputs=paths + paths, variable="rho",
                       output=str(tmp_path / "x.png")))
    with pytest.raises(KeyError):
        render(PlotJob(kind="slice", inputs=paths[:1], variable="qq",
                       output=str(tmp_path / "x.png")))


def test_norms_figure(tmp_path):
    p = tmp_path / "diag.csv"
    with open(p, "w") as fh:
        fh.write("t,dt,div_l1,div_linf,mass,min_rho,min_p\n")
        for i in range(20):
            fh.write(f"{0.01 * i},0.01,{1e-15 * (i + 1)},{1e-14 * (i + 1)},1.0,0.9,0.1\n")
    out = render(PlotJob(kind="norms", inputs=[str(p)], output=str(tmp_path / "n.png")))
    assert open(out, "rb").read()[:4] == b"\x89PNG"
    header, cols = read_csv_table(p)
    assert header[0] == "t" and cols["div_l1"].size == 20


def test_cli_exit_codes(tmp_path):
    path = tmp_path / "f.dump"
    make_dump(path)
    assert main(["map", "--in", str(path), "--var", "rho",
                 "--out", str(tmp_path / "ok.png")]) == 0
    assert main(["map", "--in", str(path), "--var", "nope",
                 "--out", str(tmp_path / "no.png")]) == 2
    assert main(["norms", "--in", str(tmp_path / "missing.csv"),
                 "--out", str(tmp_path / "no.png")]) == 2
