# coding: utf-8

"""
Exact identification of IJG standard JPEG quality factors from quantization tables.
"""

__author__ = "jpegqf developers"
__email__ = "jpegqf-dev@users.noreply.github.com"
__copyright__ = "Copyright 2024-2026, jpegqf developers"
__credits__ = ["jpegqf developers"]
__contact__ = "https://github.com/jpegqf/jpegqf"
__license__ = "BSD-3-Clause"
__status__ = "Development"
__version__ = "0.3.0"
