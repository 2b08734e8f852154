# -*- coding: utf-8 -*-
"""mdh 테스트 패키지"""
