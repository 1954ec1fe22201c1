"""
File services for the ncmod toolkit
"""

from .file_service import FileService

__all__ = ["FileService"]
