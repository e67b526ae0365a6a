""" Numeration systems over increasing integer sequences, 1^k-avoiding string languages and their Gray codes """

__version__ = '0.1.0'
__author__ = 'Cimbali <me@cimba.li>'
__all__ = ['basis', 'codec', 'language', 'graycode', 'perm', 'oracle', 'config']
