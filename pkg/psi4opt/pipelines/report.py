'''把VerificationReport渲染为table/csv/json文本, 相同输入输出逐字节相同'''
import csv
import io
import json
from typing import List
from psi4opt.compositions import format_vector
from psi4opt.snippets import UnknownFormatError, format_rational
from .verify import VerificationReport


__all__ = ['REPORT_FORMATS', 'CSV_HEADER', 'report_row', 'emit_report']

REPORT_FORMATS = ('table', 'csv', 'json')
CSV_HEADER = ['g', 'n', 'd', 'space_size', 'max', 'argmax_key', 'min', 'argmin_key', 'S', 'LC', 'P', 'status']


def _flag(value) -> str:
    return '' if value is None else ('yes' if value else 'no')


def report_row(report:VerificationReport) -> List[str]:
    '''与CSV_HEADER对应的一行, REFUSED时极值等字段为空'''
    hyp = report.hypotheses
    return [
        str(report.g), str(report.n), str(report.d), str(report.space_size),
        '' if report.max_value is None else format_rational(report.max_value),
        '' if report.argmax_key is None else format_vector(report.argmax_key),
        '' if report.min_value is None else format_rational(report.min_value),
        '' if report.argmin_key is None else format_vector(report.argmin_key),
        _flag(None if hyp is None else hyp.symmetric),
        _flag(None if hyp is None else hyp.log_concave),
        _flag(None if hyp is None else hyp.positive),
        report.status,
    ]


def _emit_table(rows:List[List[str]]) -> str:
    table = [CSV_HEADER] + rows
    widths = [max(len(row[k]) for row in table) for k in range(len(CSV_HEADER))]
    return ''.join('  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() + '\n' for row in table)


def _emit_csv(rows:List[List[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buffer.getvalue()


def emit_report(reports:List[VerificationReport], format:str='table') -> str:
    '''按(g, n)排序后渲染

    :param reports: List[VerificationReport]
    :param format: str, table/csv/json
    '''
    if format not in REPORT_FORMATS:
        raise UnknownFormatError(f'unknown report format {format!r}, choose from {"/".join(REPORT_FORMATS)}')
    reports = sorted(reports, key=lambda r: (r.g, r.n))
    if format == 'json':
        return json.dumps([report.to_dict() for report in reports], sort_keys=True, indent=2, ensure_ascii=False) + '\n'
    rows = [report_row(report) for report in reports]
    return _emit_table(rows) if format == 'table' else _emit_csv(rows)
