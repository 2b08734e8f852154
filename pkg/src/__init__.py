# -*- coding: utf-8 -*-
"""
mdh: Moderately Discontinuous Homology of surface germs
"""

__version__ = "0.1.0"
__description__ = "Hölder complex / snake 입력에서 MD-Homology rank 프로파일 계산"
