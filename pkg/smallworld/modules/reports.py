"""
Reports module for the Small World toolkit.
Writes plot-ready CSV and JSON files.
"""

import csv
import json
from pathlib import Path

from .message_log import MessageLog
from .pipeline import SweepRecord
from .settings_manager import SettingsManager

CONFLUENCE_SERIES_HEADER = ('t', 'p_uv', 'p_vu', 'asymptote')
CONFLUENCE_CURVE_HEADER = ('t', 'p_u_v1', 'p_v1_u', 'asym_v1', 'p_u_v2', 'p_v2_u', 'asym_v2')
SCORES_HEADER = ('u', 'v', 'score')
DEGREE_TABLE_HEADER = ('k', 'count', 'er_expected')


class ReportWriter:
    """Renders records as CSV rows and JSON objects"""

    @staticmethod
    def format_value(value, digits=None):
        """Text form of one CSV cell"""
        if value is None:
            return 'nan'
        if isinstance(value, bool):
            return 'true' if value else 'false'
        if isinstance(value, int):
            return str(value)
        if digits is None:
            digits = SettingsManager.get_float_digits()
        return format(float(value), f'.{digits}g')

    @staticmethod
    def write_csv(path, header, rows):
        """Write a header and rows; reals use the configured significant digits"""
        digits = SettingsManager.get_float_digits()
        path = Path(path)
        with open(path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(header)
            count = 0
            for row in rows:
                writer.writerow([ReportWriter.format_value(v, digits) for v in row])
                count += 1
        MessageLog.log_message(f"Wrote {count} rows to {path}")
        return path

    @staticmethod
    def write_json(path, payload):
        path = Path(path)
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(json.dumps(payload, indent=2) + '\n')
        MessageLog.log_message(f"Wrote {path}")
        return path

    @staticmethod
    def report_paths(path):
        """(csv path, json path) for a report destination"""
        path = Path(path)
        if path.suffix.lower() == '.json':
            return path.with_suffix('.csv'), path
        return path, path.with_suffix('.json')

    @staticmethod
    def write_small_world_report(report, path):
        """One-row CSV plus a JSON object with the same field names"""
        csv_path, json_path = ReportWriter.report_paths(path)
        record = report.to_dict()
        ReportWriter.write_csv(csv_path, report.FIELDS, [[record[k] for k in report.FIELDS]])
        ReportWriter.write_json(json_path, record)
        return csv_path, json_path

    @staticmethod
    def write_sweep(records, path):
        rows = ([r.to_dict()[k] for k in SweepRecord.FIELDS] for r in records)
        return ReportWriter.write_csv(path, SweepRecord.FIELDS, rows)

    @staticmethod
    def write_confluence_series(series, path):
        return ReportWriter.write_csv(path, CONFLUENCE_SERIES_HEADER, series.rows())

    @staticmethod
    def write_confluence_curve(first, second, path):
        """Two series side by side, one row per walk length"""
        rows = (
            (t, a_uv, a_vu, a_asym, b_uv, b_vu, b_asym)
            for (t, a_uv, a_vu, a_asym), (_, b_uv, b_vu, b_asym) in zip(first.rows(), second.rows())
        )
        return ReportWriter.write_csv(path, CONFLUENCE_CURVE_HEADER, rows)

    @staticmethod
    def write_scores(us, vs, scores, path):
        rows = ((int(u), int(v), float(s)) for u, v, s in zip(us, vs, scores))
        return ReportWriter.write_csv(path, SCORES_HEADER, rows)

    @staticmethod
    def write_degree_table(rows, path):
        return ReportWriter.write_csv(path, DEGREE_TABLE_HEADER, rows)
