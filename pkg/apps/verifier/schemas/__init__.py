from .report import CSV_COLUMNS, Report
