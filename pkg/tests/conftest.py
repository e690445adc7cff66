from fredpairs import RatMatrix


def mat(rows, cols=None):
    return RatMatrix.from_rows(rows, cols=cols)
