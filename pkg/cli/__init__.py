# -*- coding: utf-8 -*-
"""mdh 명령줄 인터페이스"""
