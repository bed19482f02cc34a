import zipfile
import pathlib


def read_text_from_zip(filename, zip_path):
    """
    Read the content of a file stored in a zip archive.
    """
    try:
        return zipfile.Path(zip_path, filename).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise IOError(f'{filename} not found in {zip_path}')
    except Exception as e:
        raise IOError(f'Error in reading zip: {str(e)}')


def read_text(file_path):
    """
    Read the content of a file.
    """
    try:
        return pathlib.Path(file_path).read_text(encoding="utf-8")
    except Exception as e:
        raise IOError(f'Error in reading file: {str(e)}')


def write_text(file_path, content: str):
    try:
        path = pathlib.Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
    except Exception as e:
        raise IOError(f'Error in writing file: {str(e)}')
