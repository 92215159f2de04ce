import numpy as np
import pytest

from rotinv import DomainError, PointCloud, RasterImage
from rotinv.io import (
    read_pgm,
    read_point_cloud_csv,
    write_pgm,
    write_point_cloud_csv,
)


@pytest.mark.parametrize("maxval,binary", [(255, True), (65535, True), (255, False), (4095, True)])
def test_pgm_round_trip(tmp_path, maxval, binary):
    rng = np.random.default_rng(1)
    img = RasterImage(9, 6, rng.uniform(0, 1, (6, 9)))
    path = tmp_path / "img.pgm"
    write_pgm(img, path, maxval=maxval, binary=binary)
    back = read_pgm(path)
    assert (back.width, back.height) == (9, 6)
    scale = maxval / img.pixels.max()
    assert np.array_equal(back.pixels, np.rint(img.pixels * scale))


def test_pgm_header_comments(tmp_path):
    path = tmp_path / "c.pgm"
    path.write_bytes(b"P2\n# a comment\n2 2\n# another\n9\n0 1\n2 9\n")
    img = read_pgm(path)
    assert img.pixels.tolist() == [[0.0, 1.0], [2.0, 9.0]]


def test_pgm_sixteen_bit_big_endian(tmp_path):
    path = tmp_path / "wide.pgm"
    body = (258).to_bytes(2, "big") + (1).to_bytes(2, "big")
    path.write_bytes(b"P5\n2 1\n65535\n" + body)
    img = read_pgm(path)
    assert img.pixels.tolist() == [[258.0, 1.0]]


def test_pgm_rejects_bad_files(tmp_path):
    bad = tmp_path / "bad.pgm"
    bad.write_bytes(b"P7\n2 2\n255\n")
    with pytest.raises(DomainError):
        read_pgm(bad)
    trunc = tmp_path / "trunc.pgm"
    trunc.write_bytes(b"P5\n4 4\n255\nab")
    with pytest.raises(DomainError):
        read_pgm(trunc)
    huge = tmp_path / "maxval.pgm"
    huge.write_bytes(b"P5\n1 1\n70000\nxx")
    with pytest.raises(DomainError):
        read_pgm(huge)


def test_csv_round_trip(tmp_path):
    pc = PointCloud.from_points([(0.5, -1.25, 2.0), (3.0, 4.0, 1.0)])
    path = tmp_path / "pts.csv"
    write_point_cloud_csv(pc, path)
    back = read_point_cloud_csv(path)
    assert np.array_equal(back.xs, pc.xs)
    assert np.array_equal(back.ys, pc.ys)
    assert np.array_equal(back.ws, pc.ws)


def test_csv_defaults_and_comments(tmp_path):
    path = tmp_path / "pts.csv"
    path.write_text("# header\n1.0, 2.0\n3.0,4.0,0.5  # trailing comment\n\n")
    pc = read_point_cloud_csv(path)
    assert pc.ws.tolist() == [1.0, 0.5]
    assert pc.xs.tolist() == [1.0, 3.0]


def test_csv_rejects_bad_lines(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("1.0\n")
    with pytest.raises(DomainError):
        read_point_cloud_csv(path)
    path.write_text("a,b\n")
    with pytest.raises(DomainError):
        read_point_cloud_csv(path)
    path.write_text("# only comments\n")
    with pytest.raises(DomainError):
        read_point_cloud_csv(path)
