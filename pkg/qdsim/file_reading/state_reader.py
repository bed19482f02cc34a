import json
import numpy as np
from . import read_tool
from ..states.density_matrix import DensityMatrix


class StateReader:
    " Reads raw two-qutrit density matrices from disk "
    def __init__(self, file_path: str | tuple[str, str], source: str = 'json', dim_a: int = 3, dim_b: int = 3):
        """
        file_path : str | tuple[str, str]
            a single file-path or a tuple as (filename, zip-path)
        source : str
            'json' for a nested [row][col] list of [re, im] pairs
            'col' for two columns [re, im], one entry per line in row-major order
        """
        self.file_path = file_path
        self.source = source.lower()
        self.dim_a = dim_a
        self.dim_b = dim_b
        self._read_file()

    def _read_file(self):
        if isinstance(self.file_path, tuple) and len(self.file_path) == 2:
            self.file_content = read_tool.read_text_from_zip(*self.file_path)
        else:
            self.file_content = read_tool.read_text(self.file_path)

        parser_method = getattr(self, f"parser_{self.source}", None)
        if not callable(parser_method):
            raise ValueError(f"Unsupported source: {self.source}")
        parser_method()
        return self

    @property
    def size(self):
        return self.dim_a * self.dim_b

    def parser_json(self):
        """
        Reading the JSON layout written by dump_state
        """
        try:
            data = np.asarray(json.loads(self.file_content), dtype=float)
        except (json.JSONDecodeError, TypeError, ValueError) as e:
            raise IOError(f'Invalid state file {self.file_path}: {str(e)}')
        if data.shape != (self.size, self.size, 2):
            raise IOError(f'Invalid state file {self.file_path}: expected shape '
                          f'({self.size}, {self.size}, 2), got {data.shape}')
        self.matrix = data[..., 0] + 1j * data[..., 1]
        return self

    def parser_col(self):
        """
        Reading two-column text [re, im]
        """
        try:
            data = np.loadtxt(self.file_content.splitlines(), ndmin=2)
        except ValueError as e:
            raise IOError(f'Invalid state file {self.file_path}: {str(e)}')
        if data.shape != (self.size ** 2, 2):
            raise IOError(f'Invalid state file {self.file_path}: expected {self.size ** 2} rows of [re, im]')
        self.matrix = (data[:, 0] + 1j * data[:, 1]).reshape(self.size, self.size)
        return self

    def to_state(self) -> DensityMatrix:
        return DensityMatrix(self.matrix, self.dim_a, self.dim_b)


def load_state(path, source: str = 'json') -> DensityMatrix:
    """
    Load and validate a density matrix. Unreadable or malformed files raise IOError;
    matrices that are not valid states raise the usual QdsimError subclasses.
    """
    return StateReader(path, source).to_state()


def state_to_json(rho: DensityMatrix) -> str:
    " JSON text of rho as [row][col] -> [re, im]; repr floats keep the full double precision "
    m = rho.matrix
    rows = [[[float(z.real), float(z.imag)] for z in row] for row in m]
    return json.dumps(rows)


def dump_state(rho: DensityMatrix, path):
    read_tool.write_text(path, state_to_json(rho))
    return path
