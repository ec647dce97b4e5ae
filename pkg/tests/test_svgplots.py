import math

from windsent.report import load_report
from windsent.svgplots import (
    bar_chart_svg,
    hbar_chart_svg,
    pie_chart_svg,
    render_report_plots,
)

COLORS = ("#2e7d32", "#9e9e9e", "#c62828")
LABELS = ("positive", "neutral", "negative")


class TestPieGeometry:
    def test_half_quarter_quarter_wedges(self):
        svg = pie_chart_svg("t", LABELS, [2, 1, 1], COLORS)
        # wedges start at twelve o'clock (200, 80) and sweep clockwise:
        # 180 degrees lands at (200, 380), another 90 at (50, 230)
        assert 'L 200.00 80.00 A 150.00 150.00 0 0 1 200.00 380.00' in svg
        assert 'L 200.00 380.00 A 150.00 150.00 0 0 1 50.00 230.00' in svg
        assert 'L 50.00 230.00 A 150.00 150.00 0 0 1 200.00 80.00' in svg

    def test_all_zero_renders_placeholder(self):
        svg = pie_chart_svg("t", LABELS, [0, 0, 0], COLORS)
        assert "<path" not in svg
        assert "empty" in svg
        assert "stroke-dasharray" in svg

    def test_single_full_wedge_is_a_circle(self):
        svg = pie_chart_svg("t", LABELS, [5, 0, 0], COLORS)
        assert "<path" not in svg
        assert '<circle cx="200.00" cy="230.00" r="150.00" fill="#2e7d32"/>' in svg

    def test_large_arc_flag(self):
        svg = pie_chart_svg("t", LABELS, [3, 1, 0], COLORS)
        assert " 0 1 1 " in svg  # 270-degree wedge uses the large-arc flag


class TestBarCharts:
    def test_zero_counts_render_zero_height_bars(self):
        svg = bar_chart_svg("t", LABELS, [0, 0, 0], COLORS)
        assert svg.count('height="0.00"') == 3

    def test_counts_scale_to_tallest(self):
        svg = bar_chart_svg("t", LABELS, [10, 5, 0], COLORS)
        assert 'height="312.00"' in svg   # full plot height for the peak
        assert 'height="156.00"' in svg

    def test_label_escaping(self):
        svg = hbar_chart_svg("t", [("a<b>&\"c\"", 3)])
        assert "a&lt;b&gt;&amp;" in svg
        assert "<b>" not in svg

    def test_empty_ranking_notes_absence(self):
        svg = hbar_chart_svg("t", [])
        assert "no qualifying words" in svg


class TestRenderedSet:
    def test_thirteen_files_with_pinned_digests(self, golden_dir, tmp_path):
        import hashlib
        import json

        report = load_report(golden_dir / "golden_report.json")
        written = render_report_plots(report, tmp_path)
        assert len(written) == 13
        digests = {p.name: hashlib.sha256(p.read_bytes()).hexdigest() for p in written}
        pinned = json.loads((golden_dir / "svg_digests.json").read_text())
        assert digests == pinned

    def test_rendering_is_deterministic(self, golden_dir, tmp_path):
        report = load_report(golden_dir / "golden_report.json")
        first = {p.name: p.read_bytes()
                 for p in render_report_plots(report, tmp_path / "a")}
        second = {p.name: p.read_bytes()
                  for p in render_report_plots(report, tmp_path / "b")}
        assert first == second

    def test_svg_has_no_timestamps(self, golden_dir, tmp_path):
        report = load_report(golden_dir / "golden_report.json")
        for path in render_report_plots(report, tmp_path):
            content = path.read_text(encoding="utf-8")
            assert "date" not in content.lower()
            assert content.startswith("<svg ")
            assert content.endswith("</svg>\n")


def test_wedge_angle_math_matches_fractions():
    # the 0.5/0.25/0.25 split must produce 180/90/90 degree sweeps
    fractions = [0.5, 0.25, 0.25]
    sweeps = [f * 360.0 for f in fractions]
    assert sweeps == [180.0, 90.0, 90.0]
    angle = 0.0
    points = []
    for sweep in sweeps:
        angle += sweep
        points.append((200 + 150 * math.sin(math.radians(angle)),
                       230 - 150 * math.cos(math.radians(angle))))
    assert (round(points[0][0], 6), round(points[0][1], 6)) == (200.0, 380.0)
    assert round(points[1][0], 6) == 50.0
