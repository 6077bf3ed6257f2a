def strictly_decreasing(values):
    values = list(values)
    return all(b < a for a, b in zip(values, values[1:]))


def width_trend(reports, stat="p95"):
    """Strict decrease of one DeviationReport statistic across increasing widths."""
    return strictly_decreasing(getattr(r, stat) for r in reports)
