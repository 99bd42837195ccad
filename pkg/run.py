from app import create_app
from app.cli import cli

app = create_app()

if __name__ == '__main__':
    cli()
