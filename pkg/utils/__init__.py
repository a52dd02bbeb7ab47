from .report_export import save_report, load_report, write_report_artifacts, export_excel
from .region_plot import render_svg, render_html

__all__ = ['save_report', 'load_report', 'write_report_artifacts', 'export_excel', 'render_svg', 'render_html']
